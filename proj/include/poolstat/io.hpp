#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "poolstat/interval.hpp"
#include "poolstat/pbox.hpp"
#include "poolstat/simulate.hpp"

namespace poolstat {

// Formats a double with 17 significant digits, enough to round-trip.
std::string format_double(double v);

// Dataset CSV: optional "# label: <tag>" comment, header "lo,hi" (or
// "lo,hi,truth" when generating values are recorded), then one row per
// interval.
void write_dataset(std::ostream& os, const IntervalDataset& ds,
                   const std::vector<double>* truths = nullptr);
IntervalDataset read_dataset(std::istream& is, const std::string& source_name = "<input>");

IntervalDataset load_dataset(const std::string& path);
void save_dataset(const std::string& path, const IntervalDataset& ds,
                  const std::vector<double>* truths = nullptr);

// Scenario text format: one "key = value" per line, '#' comments. Unknown
// keys are rejected; all scenario invariants are enforced on load.
struct ScenarioFile {
    Scenario scenario;
    std::vector<double> f_grid;           // empty when a single f was given
    std::vector<double> dispersion_grid;  // non-empty selects the contour mode
};

ScenarioFile parse_scenario(std::istream& is, const std::string& source_name = "<input>");
ScenarioFile load_scenario(const std::string& path);

// Step function as two-column CSV (x, p).
void write_step_function_csv(std::ostream& os, const StepFunction& f);

// Band CSV: one row per jump point of any of the four curves.
void write_band_csv(std::ostream& os, const PBox& pb, const KSBand& band);

void write_curve_csv(std::ostream& os, const Curve& curve);
void write_grid_csv(std::ostream& os, const ContourGrid& grid);
void write_study_csv(std::ostream& os, const Scenario& sc, const StudyResult& study);
void write_study_histogram_csv(std::ostream& os, const StudyResult& study);

}  // namespace poolstat
