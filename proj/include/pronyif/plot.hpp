#pragma once

#include <filesystem>
#include <vector>

namespace pronyif {

// SVG views of emitted CSV files. They read nothing but the CSVs.

// Heat map of a TF CSV (log scale, max-pooled to at most 256 x 160 cells)
// with the IF series of each estimates CSV drawn on top.
void plot_tf_svg(const std::filesystem::path& tf_csv, const std::vector<std::filesystem::path>& estimate_csvs,
                 const std::filesystem::path& svg);

// IF series of estimates CSVs without a background.
void plot_estimates_svg(const std::vector<std::filesystem::path>& estimate_csvs, const std::filesystem::path& svg);

// RMSE against sigma (log y), one polyline per estimator and mode.
void plot_errors_svg(const std::filesystem::path& error_csv, const std::filesystem::path& svg);

}  // namespace pronyif
