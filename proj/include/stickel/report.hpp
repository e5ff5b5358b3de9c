#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <json.hpp>

namespace stickel {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, indeterminate, inapplicable, monitored };

std::string_view to_string(Status s);
Status status_from_string(std::string_view s);

/// Severity merge: fail beats indeterminate beats monitored beats pass;
/// inapplicable only survives when both sides are inapplicable.
Status worst(Status a, Status b);

/// Decimal string for every big integer so consumers never lose precision.
inline std::string dec(const mpz_class& x) { return x.get_str(10); }
inline std::string dec(std::int64_t x) { return std::to_string(x); }

struct CheckReport {
    std::string check;
    Json params = Json::object();
    Status status = Status::pass;
    Json witnesses = Json::object();
    Json convention = Json::object();
    std::int64_t duration_ms = 0;

    /// Lowers status to at least s.
    void degrade(Status s) { status = worst(status, s); }
    bool failed() const { return status == Status::fail; }

    Json to_json() const;
    static CheckReport from_json(const Json& j);
    /// check,status,params,witnesses with the two objects JSON-encoded.
    std::string to_csv_row() const;
    static std::string csv_header();
};

/// Times a scope and writes the elapsed milliseconds into a report.
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace stickel
