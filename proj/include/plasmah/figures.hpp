#pragma once

#include <string>
#include <utility>
#include <vector>

#include "plasmah/model.hpp"

namespace plasmah {

/// Regenerated data behind one published figure panel: a shared abscissa and
/// one ordinate column per curve.
struct FigureSeries {
    std::string figure_id;
    std::string abscissa_name;
    std::vector<std::pair<std::string, std::string>> params; ///< header key=value
    std::vector<double> abscissa; ///< strictly increasing

    struct Curve {
        std::string label;
        std::vector<double> values;
    };
    std::vector<Curve> curves;
};

/// Known panel ids: 1a-1d, 2a, 2b, 3a-3c, 4a-4c.
const std::vector<std::string>& known_figure_ids();

/// Recomputes the series for one panel on a declared 201-point grid.
/// Throws ArgumentError for an unknown id.
FigureSeries figure_data(const std::string& figure_id);

/// CSV rendering: `# figure=<id> params=<k=v,...>` header, a column-name
/// line, then rows with 9-significant-digit numbers and \n line endings.
std::string to_csv(const FigureSeries& series);

/// One row of the AB-flux dominance analysis.
struct DeltaERow {
    double xi;
    double delta_e;    ///< E(B=5) - E(B=0)
    double quoted;     ///< value quoted in prose, NaN when none
    bool has_quote;
    bool flagged;      ///< quoted value exists and disagrees by > 10%
};

/// Energy shift E(B=5) - E(B=0) at m = n = 0 for each AB-flux ratio.
/// Base config supplies A, lambda_D, g, mu, hbar; F is set explicitly.
std::vector<DeltaERow> delta_e_analysis(const std::vector<double>& xis, double F,
                                        PlasmaFieldConfig base = {});

/// Fixed-format number rendering used for every CSV cell (9 significant
/// digits), shared so output stays byte-stable.
std::string format_number(double v);

} // namespace plasmah
