#include "plasmah/tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "plasmah/figures.hpp"
#include "plasmah/parallel.hpp"
#include "plasmah/susy.hpp"

#ifndef PLASMAH_DEFAULT_DATA_FILE
#define PLASMAH_DEFAULT_DATA_FILE ""
#endif

namespace plasmah {

std::string default_data_file() {
    if (const char* env = std::getenv("PLASMAH_DATA_FILE")) return env;
    return PLASMAH_DEFAULT_DATA_FILE;
}

ReferenceTable load_reference_table(int table_id, const std::string& path) {
    if (table_id != 1 && table_id != 2)
        throw ArgumentError("reference table id must be 1 or 2");

    const std::string file = path.empty() ? default_data_file() : path;
    std::ifstream in(file);
    if (!in)
        throw ArgumentError("cannot open reference data file: " + file);

    ReferenceTable table;
    table.table_id = table_id;
    table.g = table_id == 1 ? 1.0 : 0.0;

    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != "table,m,n,column,value")
                throw ArgumentError("unexpected header in data file: " + line);
            header_seen = true;
            continue;
        }
        std::istringstream row(line);
        int tid = 0;
        ReferenceCell cell{};
        char comma = 0;
        if (!(row >> tid >> comma >> cell.m >> comma >> cell.n >> comma
                  >> cell.column >> comma >> cell.value))
            throw ArgumentError("malformed data row: " + line);
        if (tid == table_id) table.rows.push_back(cell);
    }
    if (table.rows.size() != 60)
        throw ArgumentError("expected 60 cells for table "
                            + std::to_string(table_id) + ", got "
                            + std::to_string(table.rows.size()));
    return table;
}

DiffReport reproduce_table(int table_id, const std::string& data_path,
                           double tol_rel, double tol_abs) {
    const ReferenceTable ref = load_reference_table(table_id, data_path);

    PlasmaFieldConfig base;
    base.A = ref.A;
    base.lambda_d = ref.lambda_d;
    base.g = ref.g;

    DiffReport report;
    report.table_id = table_id;
    report.tol_rel = tol_rel;
    report.tol_abs = tol_abs;
    report.cells.resize(ref.rows.size());

    parallel_for(ref.rows.size(), [&](std::size_t i) {
        const ReferenceCell& cell = ref.rows[i];
        const FieldColumn& col = kTableColumns[cell.column - 1];
        PlasmaFieldConfig cfg = base;
        cfg.F = col.F;
        cfg.xi = col.xi;
        cfg.B = col.B;
        DiffCell diff;
        diff.m = cell.m;
        diff.n = cell.n;
        diff.column = cell.column;
        diff.reference = cell.value;
        diff.computed = total_energy({cell.n, cell.m}, cfg).total;
        diff.abs_err = std::abs(diff.computed - diff.reference);
        diff.rel_err = std::abs(diff.reference) > 0.0
                           ? diff.abs_err / std::abs(diff.reference)
                           : diff.abs_err;
        diff.pass = diff.abs_err
                    <= std::max(tol_rel * std::abs(diff.reference), tol_abs);
        report.cells[i] = diff;
    });

    report.max_abs_err = 0.0;
    report.max_rel_err = 0.0;
    report.n_pass = 0;
    for (const DiffCell& c : report.cells) {
        report.max_abs_err = std::max(report.max_abs_err, c.abs_err);
        report.max_rel_err = std::max(report.max_rel_err, c.rel_err);
        if (c.pass) ++report.n_pass;
    }
    report.pass = report.n_pass == static_cast<int>(report.cells.size());
    return report;
}

std::string render_text(const DiffReport& report) {
    std::ostringstream os;
    os << "table " << report.table_id << " regression ("
       << (report.table_id == 1 ? "g=1, dense quantum plasma"
                                : "g=0, weakly coupled plasma")
       << ", A=1, lambda_D=20)\n";
    os << "tolerance: max(" << format_number(report.tol_rel) << " relative, "
       << format_number(report.tol_abs) << " absolute)\n\n";
    os << "   m   n col        computed       reference         abs err  status\n";
    for (const DiffCell& c : report.cells) {
        std::ostringstream comp, ref, err;
        comp << std::setw(15) << format_number(c.computed);
        ref << std::setw(15) << format_number(c.reference);
        err << std::setw(15) << format_number(c.abs_err);
        os << std::setw(4) << c.m << std::setw(4) << c.n << std::setw(4)
           << c.column << " " << comp.str() << " " << ref.str() << " "
           << err.str() << "  " << (c.pass ? "pass" : "FAIL") << "\n";
    }
    os << "\n" << report.n_pass << "/" << report.cells.size() << " cells pass";
    os << "; max abs err " << format_number(report.max_abs_err);
    os << ", max rel err " << format_number(report.max_rel_err) << "\n";
    return os.str();
}

std::string render_json(const DiffReport& report) {
    nlohmann::json j;
    j["table_id"] = report.table_id;
    j["tolerance"] = {{"relative", report.tol_rel}, {"absolute", report.tol_abs}};
    j["pass"] = report.pass;
    j["n_pass"] = report.n_pass;
    j["n_cells"] = report.cells.size();
    j["max_abs_err"] = report.max_abs_err;
    j["max_rel_err"] = report.max_rel_err;
    j["cells"] = nlohmann::json::array();
    for (const DiffCell& c : report.cells) {
        j["cells"].push_back({{"m", c.m},
                              {"n", c.n},
                              {"column", c.column},
                              {"computed", c.computed},
                              {"reference", c.reference},
                              {"abs_err", c.abs_err},
                              {"rel_err", c.rel_err},
                              {"pass", c.pass}});
    }
    return j.dump(2) + "\n";
}

} // namespace plasmah
