#include "stickel/tables.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "stickel/arith.hpp"
#include "stickel/regularity.hpp"

#ifndef STICKEL_DATA_DIR
#define STICKEL_DATA_DIR "data"
#endif

namespace stickel {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

int to_int(const std::string& s) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw UsageError("trailing characters in '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw UsageError("not an integer: '" + s + "'");
    }
}

mpz_class to_mpz(const std::string& s) {
    mpz_class x;
    if (x.set_str(s, 10) != 0) throw UsageError("not an integer: '" + s + "'");
    return x;
}

}  // namespace

std::string data_dir() {
    if (const char* env = std::getenv("STICKEL_DATA_DIR"); env != nullptr && *env != '\0') return env;
    return STICKEL_DATA_DIR;
}

std::vector<std::vector<std::string>> read_csv(const std::string& path, const std::string& expected_header) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw UsageError(path + " is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != expected_header) throw UsageError(path + ": expected header '" + expected_header + "'");
    const std::size_t width = split(expected_header).size();
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split(line);
        if (fields.size() != width) throw UsageError(path + ": malformed row '" + line + "'");
        rows.push_back(std::move(fields));
    }
    return rows;
}

std::vector<IrregularPair> load_irregular_pairs(const std::string& path) {
    std::vector<IrregularPair> out;
    for (const auto& row : read_csv(path, "p,k")) out.push_back({to_int(row[0]), to_int(row[1])});
    return out;
}

std::vector<QuadClassRow> load_quad_class(const std::string& path) {
    std::vector<QuadClassRow> out;
    for (const auto& row : read_csv(path, "p,h")) out.push_back({to_int(row[0]), to_int(row[1])});
    return out;
}

std::vector<AnnihilatorExample> load_annihilator_examples(const std::string& path) {
    std::vector<AnnihilatorExample> out;
    for (const auto& row : read_csv(path, "p,h,beta,rho,d,nu")) {
        AnnihilatorExample ex{to_int(row[0]), to_mpz(row[1]), std::nullopt, to_int(row[3]),
                              to_int(row[4]), std::nullopt};
        if (!row[2].empty()) ex.beta = to_int(row[2]);
        if (!row[5].empty()) ex.nu = to_mpz(row[5]);
        out.push_back(std::move(ex));
    }
    return out;
}

std::vector<CheckReport> verify_tables(const std::string& dir) {
    std::vector<CheckReport> out;

    {
        Stopwatch clock;
        CheckReport r;
        r.check = "table_irregular_pairs";
        r.params = {{"file", "irregular_pairs.csv"}, {"p_max", 149}};
        const auto table = load_irregular_pairs(dir + "/irregular_pairs.csv");
        std::vector<IrregularPair> fresh;
        for (auto p : primes_between(3, 149)) {
            for (int k : irregular_indices(static_cast<int>(p))) fresh.push_back({static_cast<int>(p), k});
        }
        Json mismatches = Json::array();
        for (const auto& row : table) {
            if (std::find(fresh.begin(), fresh.end(), row) == fresh.end()) {
                mismatches.push_back({{"p", row.p}, {"k", row.k}, {"problem", "not irregular"}});
            }
        }
        for (const auto& row : fresh) {
            if (std::find(table.begin(), table.end(), row) == table.end()) {
                mismatches.push_back({{"p", row.p}, {"k", row.k}, {"problem", "missing from table"}});
            }
        }
        r.witnesses["rows"] = table.size();
        r.witnesses["mismatches"] = mismatches;
        if (!mismatches.empty()) r.degrade(Status::fail);
        r.duration_ms = clock.elapsed_ms();
        out.push_back(std::move(r));
    }

    {
        Stopwatch clock;
        CheckReport r;
        r.check = "table_quad_class";
        r.params = {{"file", "quad_class.csv"}, {"p_max", 499}};
        const auto table = load_quad_class(dir + "/quad_class.csv");
        Json mismatches = Json::array();
        std::size_t expected_rows = 0;
        for (auto p64 : primes_between(7, 499)) {
            const int p = static_cast<int>(p64);
            if (p % 4 != 3) continue;
            ++expected_rows;
            const std::int64_t h = dirichlet_h(p);
            const std::int64_t oracle = quad_class_oracle(p);
            const auto it = std::find_if(table.begin(), table.end(), [&](const QuadClassRow& row) { return row.p == p; });
            if (it == table.end() || it->h != h || h != oracle) {
                mismatches.push_back({{"p", p}, {"dirichlet", h}, {"oracle", oracle},
                                      {"table", it == table.end() ? Json(nullptr) : Json(it->h)}});
            }
        }
        if (table.size() != expected_rows) mismatches.push_back({{"problem", "row count"}, {"rows", table.size()}});
        r.witnesses["rows"] = table.size();
        r.witnesses["mismatches"] = mismatches;
        if (!mismatches.empty()) r.degrade(Status::fail);
        r.duration_ms = clock.elapsed_ms();
        out.push_back(std::move(r));
    }

    for (const auto& ex : load_annihilator_examples(dir + "/annihilator_examples.csv")) {
        CheckReport r = annihilator_check(ex);
        r.check = "table_annihilator";
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace stickel
