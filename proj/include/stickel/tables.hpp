#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stickel/class_annihilators.hpp"
#include "stickel/report.hpp"

namespace stickel {

struct IrregularPair {
    int p;
    int k;
    bool operator==(const IrregularPair&) const = default;
};

struct QuadClassRow {
    int p;
    std::int64_t h;
    bool operator==(const QuadClassRow&) const = default;
};

/// Directory holding the shipped CSV files ($STICKEL_DATA_DIR overrides).
std::string data_dir();

/// Rows of a headed CSV file as raw fields; throws UsageError when the
/// header differs from `expected_header`.
std::vector<std::vector<std::string>> read_csv(const std::string& path, const std::string& expected_header);

std::vector<IrregularPair> load_irregular_pairs(const std::string& path);
std::vector<QuadClassRow> load_quad_class(const std::string& path);
std::vector<AnnihilatorExample> load_annihilator_examples(const std::string& path);

/// Recomputes every shipped row and reports per table (per row for annihilators).
std::vector<CheckReport> verify_tables(const std::string& dir);

}  // namespace stickel
