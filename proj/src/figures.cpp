#include "plasmah/figures.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "plasmah/parallel.hpp"
#include "plasmah/susy.hpp"

namespace plasmah {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

namespace {

std::vector<double> linspace(double a, double b, int count) {
    std::vector<double> x(count);
    for (int i = 0; i < count; ++i) x[i] = a + (b - a) * i / (count - 1);
    return x;
}

constexpr int kPoints = 201;

std::string label(const std::string& key, double v) {
    return key + "=" + format_number(v);
}

void add_param(FigureSeries& s, const std::string& key, double v) {
    s.params.emplace_back(key, format_number(v));
}

// Potential panels: U_eff(r) curves for one varied parameter.
FigureSeries potential_panel(const std::string& id, PlasmaFieldConfig base, int m,
                             double r_lo, double r_hi,
                             const std::string& vary_key,
                             const std::vector<double>& values) {
    FigureSeries s;
    s.figure_id = id;
    s.abscissa_name = "r";
    s.abscissa = linspace(r_lo, r_hi, kPoints);
    add_param(s, "g", base.g);
    add_param(s, "m", m);
    if (vary_key != "B") add_param(s, "B", base.B);
    if (vary_key != "xi") add_param(s, "xi", base.xi);
    if (vary_key != "F") add_param(s, "F", base.F);
    if (vary_key != "lambda_D") add_param(s, "lambda_D", base.lambda_d);
    add_param(s, "points", kPoints);

    for (double v : values) {
        PlasmaFieldConfig cfg = base;
        if (vary_key == "B") cfg.B = v;
        else if (vary_key == "xi") cfg.xi = v;
        else if (vary_key == "F") cfg.F = v;
        else cfg.lambda_d = v;
        FigureSeries::Curve curve;
        curve.label = label(vary_key, v);
        curve.values.resize(s.abscissa.size());
        for (std::size_t i = 0; i < s.abscissa.size(); ++i)
            curve.values[i] = effective_potential(s.abscissa[i], {0, m}, cfg);
        s.curves.push_back(std::move(curve));
    }
    return s;
}

// Energy panels: total energy against B or F for a family of configs.
FigureSeries energy_panel(const std::string& id, PlasmaFieldConfig base,
                          QuantumNumbers qn, const std::string& abscissa_key,
                          double lo, double hi,
                          const std::vector<std::pair<std::string, PlasmaFieldConfig>>& family) {
    FigureSeries s;
    s.figure_id = id;
    s.abscissa_name = abscissa_key;
    s.abscissa = linspace(lo, hi, kPoints);
    add_param(s, "g", base.g);
    add_param(s, "lambda_D", base.lambda_d);
    add_param(s, "m", qn.m);
    add_param(s, "n", qn.n);
    add_param(s, "points", kPoints);

    s.curves.resize(family.size());
    for (std::size_t c = 0; c < family.size(); ++c) {
        s.curves[c].label = family[c].first;
        s.curves[c].values.resize(s.abscissa.size());
    }
    parallel_for(family.size() * s.abscissa.size(), [&](std::size_t idx) {
        const std::size_t c = idx / s.abscissa.size();
        const std::size_t i = idx % s.abscissa.size();
        PlasmaFieldConfig cfg = family[c].second;
        if (abscissa_key == "B") cfg.B = s.abscissa[i];
        else cfg.F = s.abscissa[i];
        s.curves[c].values[i] = total_energy(qn, cfg).total;
    });
    return s;
}

FigureSeries series_overlay_panel() {
    // Exact potential against its truncated series for several screening
    // lengths; the truncation error must shrink with growing lambda_D.
    FigureSeries s;
    s.figure_id = "2a";
    s.abscissa_name = "r";
    s.abscissa = linspace(0.5, 10.0, kPoints);
    PlasmaFieldConfig base;
    base.g = 1.0;
    base.xi = 5.0;
    base.F = 0.001;
    base.B = 0.0;
    const int m = 1;
    add_param(s, "g", base.g);
    add_param(s, "m", m);
    add_param(s, "xi", base.xi);
    add_param(s, "F", base.F);
    add_param(s, "B", base.B);
    add_param(s, "points", kPoints);

    for (double ld : {2.0, 5.0, 10.0, 40.0}) {
        PlasmaFieldConfig cfg = base;
        cfg.lambda_d = ld;
        FigureSeries::Curve exact, series;
        exact.label = "exact " + label("lambda_D", ld);
        series.label = "series " + label("lambda_D", ld);
        exact.values.resize(s.abscissa.size());
        series.values.resize(s.abscissa.size());
        for (std::size_t i = 0; i < s.abscissa.size(); ++i) {
            exact.values[i] = effective_potential(s.abscissa[i], {0, m}, cfg);
            series.values[i] = series_potential(s.abscissa[i], {0, m}, cfg);
        }
        s.curves.push_back(std::move(exact));
        s.curves.push_back(std::move(series));
    }
    return s;
}

} // namespace

const std::vector<std::string>& known_figure_ids() {
    static const std::vector<std::string> ids = {"1a", "1b", "1c", "1d", "2a", "2b",
                                                 "3a", "3b", "3c", "4a", "4b", "4c"};
    return ids;
}

FigureSeries figure_data(const std::string& figure_id) {
    PlasmaFieldConfig pot;
    pot.g = 1.0;
    pot.lambda_d = 40.0;
    pot.F = 0.0001;
    pot.B = 5.0;
    pot.xi = 5.0;

    if (figure_id == "1a") {
        PlasmaFieldConfig base = pot;
        base.B = 0.0;
        return potential_panel("1a", base, 1, 0.05, 10.0, "B", {0.0, 2.0, 5.0, 10.0});
    }
    if (figure_id == "1b")
        return potential_panel("1b", pot, 1, 0.05, 10.0, "xi", {0.0, 2.0, 5.0, 10.0});
    if (figure_id == "1c")
        return potential_panel("1c", pot, 1, 0.05, 10.0, "F", {0.0001, 0.5, 1.0, 2.0});
    if (figure_id == "1d")
        return potential_panel("1d", pot, 1, 0.05, 10.0, "lambda_D",
                               {2.0, 20.0, 200.0, 2000.0});
    if (figure_id == "2a") return series_overlay_panel();
    if (figure_id == "2b") {
        PlasmaFieldConfig base;
        base.g = 1.0;
        base.F = 0.0001;
        base.B = 0.0;
        base.xi = 0.0;
        return potential_panel("2b", base, 1, 0.05, 10.0, "lambda_D",
                               {2.0, 5.0, 10.0, 40.0});
    }

    PlasmaFieldConfig en;
    en.g = 1.0;
    en.lambda_d = 20.0;

    const auto xi_family = [](const PlasmaFieldConfig& family_base) {
        std::vector<std::pair<std::string, PlasmaFieldConfig>> fam;
        for (double xi : {1.0, 2.0, 3.0, 4.0}) {
            PlasmaFieldConfig cfg = family_base;
            cfg.xi = xi;
            fam.emplace_back(label("xi", xi), cfg);
        }
        return fam;
    };

    if (figure_id == "3a" || figure_id == "3b" || figure_id == "3c") {
        PlasmaFieldConfig base = en;
        base.F = figure_id == "3c" ? 1.2 : 0.0001;
        const QuantumNumbers qn = figure_id == "3b" ? QuantumNumbers{2, -1}
                                                    : QuantumNumbers{0, 0};
        auto s = energy_panel(figure_id, base, qn, "B", 0.0, 5.0, xi_family(base));
        add_param(s, "F", base.F);
        return s;
    }

    const auto f_family = [&](std::vector<double> xis) {
        std::vector<std::pair<std::string, PlasmaFieldConfig>> fam;
        for (double xi : xis)
            for (double F : {0.0001, 1.2}) {
                PlasmaFieldConfig cfg = en;
                cfg.xi = xi;
                cfg.F = F;
                fam.emplace_back(label("xi", xi) + " " + label("F", F), cfg);
            }
        return fam;
    };

    if (figure_id == "4a") return energy_panel("4a", en, {0, 0}, "B", 0.0, 5.0, f_family({1.0}));
    if (figure_id == "4b") return energy_panel("4b", en, {0, 0}, "B", 0.0, 5.0, f_family({2.0, 4.0}));
    if (figure_id == "4c") {
        PlasmaFieldConfig base = en;
        base.B = 1.0;
        auto s = energy_panel("4c", base, {0, 0}, "F", 0.0, 1.5, xi_family(base));
        add_param(s, "B", base.B);
        return s;
    }
    throw ArgumentError("unknown figure id: " + figure_id
                        + " (known: 1a-1d, 2a, 2b, 3a-3c, 4a-4c)");
}

std::string to_csv(const FigureSeries& series) {
    std::ostringstream os;
    os << "# figure=" << series.figure_id << " params=";
    for (std::size_t i = 0; i < series.params.size(); ++i) {
        if (i) os << ",";
        os << series.params[i].first << "=" << series.params[i].second;
    }
    os << "\n" << series.abscissa_name;
    for (const auto& c : series.curves) os << "," << c.label;
    os << "\n";
    for (std::size_t i = 0; i < series.abscissa.size(); ++i) {
        os << format_number(series.abscissa[i]);
        for (const auto& c : series.curves) os << "," << format_number(c.values[i]);
        os << "\n";
    }
    return os.str();
}

std::vector<DeltaERow> delta_e_analysis(const std::vector<double>& xis, double F,
                                        PlasmaFieldConfig base) {
    base.F = F;
    std::vector<DeltaERow> rows;
    rows.reserve(xis.size());
    for (double xi : xis) {
        PlasmaFieldConfig at_b5 = base;
        at_b5.xi = xi;
        PlasmaFieldConfig at_b0 = at_b5;
        at_b5.B = 5.0;
        at_b0.B = 0.0;
        DeltaERow row;
        row.xi = xi;
        row.delta_e = total_energy({0, 0}, at_b5).total
                      - total_energy({0, 0}, at_b0).total;
        row.quoted = std::nan("");
        row.has_quote = false;
        // Published shifts accompanying the reference tables (xi = 1, 2, 4).
        // The xi = 2 and xi = 4 quotes are not reproducible from the closed
        // forms (~210 and ~1750 come out); they are reported flagged, never
        // silently matched.
        if (xi == 1.0) { row.quoted = 38.0; row.has_quote = true; }
        if (xi == 2.0) { row.quoted = 160.0; row.has_quote = true; }
        if (xi == 4.0) { row.quoted = 2500.0; row.has_quote = true; }
        row.flagged = row.has_quote
                      && std::abs(row.delta_e - row.quoted) > 0.10 * std::abs(row.quoted);
        rows.push_back(row);
    }
    return rows;
}

} // namespace plasmah
