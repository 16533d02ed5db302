#pragma once

#include <array>
#include <string>
#include <vector>

#include "plasmah/model.hpp"

namespace plasmah {

/// Field settings of one reference-table column.
struct FieldColumn {
    double F;
    double xi;
    double B;
};

/// The five field columns shared by both reference tables.
inline constexpr std::array<FieldColumn, 5> kTableColumns = {{
    {0.0, 0.0, 0.0},
    {0.0, 0.0, 5.0},
    {0.0, 5.0, 0.0},
    {5.0, 0.0, 0.0},
    {5.0, 5.0, 5.0},
}};

struct ReferenceCell {
    int m;
    int n;
    int column; ///< 1-based index into kTableColumns
    double value;
};

/// One embedded reference table: table 1 is the dense-quantum-plasma set
/// (g = 1), table 2 the weakly-coupled set (g = 0); both at A=1, lambda_D=20.
struct ReferenceTable {
    int table_id;
    double g;
    double lambda_d = 20.0;
    double A = 1.0;
    std::vector<ReferenceCell> rows; ///< 60 cells: 12 (m,n) rows x 5 columns
};

/// Resolves the reference data file: PLASMAH_DATA_FILE env var if set,
/// otherwise the path baked in at configure time.
std::string default_data_file();

/// Loads and validates one table from the plain-text data file.
/// Throws ArgumentError on unknown id or malformed data.
ReferenceTable load_reference_table(int table_id, const std::string& path = {});

struct DiffCell {
    int m;
    int n;
    int column;
    double computed;
    double reference;
    double abs_err;
    double rel_err;
    bool pass;
};

/// Per-cell regression diff of computed energies against a reference table.
struct DiffReport {
    int table_id;
    double tol_rel;
    double tol_abs;
    std::vector<DiffCell> cells;
    double max_abs_err;
    double max_rel_err;
    int n_pass;
    bool pass; ///< every cell within max(tol_rel * |ref|, tol_abs)
};

/// Recomputes all 60 cells of the chosen table via total_energy and diffs
/// them against the embedded reference values.
DiffReport reproduce_table(int table_id, const std::string& data_path = {},
                           double tol_rel = 2e-6, double tol_abs = 1e-5);

/// Aligned plain-text rendering of a diff report.
std::string render_text(const DiffReport& report);

/// Machine-readable JSON rendering (stable key set).
std::string render_json(const DiffReport& report);

} // namespace plasmah
