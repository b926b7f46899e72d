#pragma once

#include "infomax/core/config.hpp"
#include "infomax/harness/loop.hpp"

#include <string>
#include <vector>

namespace infomax::harness {

/// Writes a RunResult directory: config.txt, log.csv, metrics.csv,
/// histogram.csv. A missing directory is created.
void write_run_dir(const std::string& dir, const ExperimentConfig& config, const RunResult& run);

void write_metrics_csv(const std::string& path, const std::vector<MetricRow>& rows, int D);
void write_histogram_csv(const std::string& path, const SelectionHistogram& hist);
void write_curves_csv(const std::string& path, const std::vector<CurveRow>& rows);

void write_decoded_csv(const std::string& path, const Matrix& posteriors,
                       const std::vector<int>* true_states);

}  // namespace infomax::harness
