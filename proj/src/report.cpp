#include "stickel/report.hpp"

#include <array>

#include "stickel/arith.hpp"

namespace stickel {

namespace {

constexpr std::array<std::string_view, 5> kNames = {"pass", "fail", "indeterminate",
                                                    "inapplicable", "monitored"};

int severity(Status s) {
    switch (s) {
        case Status::inapplicable: return 0;
        case Status::pass: return 1;
        case Status::monitored: return 2;
        case Status::indeterminate: return 3;
        case Status::fail: return 4;
    }
    return 4;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string_view to_string(Status s) { return kNames[static_cast<std::size_t>(s)]; }

Status status_from_string(std::string_view s) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == s) return static_cast<Status>(i);
    }
    throw UsageError("unknown status '" + std::string(s) + "'");
}

Status worst(Status a, Status b) {
    if (a == Status::inapplicable) return b;
    if (b == Status::inapplicable) return a;
    return severity(a) >= severity(b) ? a : b;
}

Json CheckReport::to_json() const {
    Json j;
    j["check"] = check;
    j["params"] = params;
    j["status"] = std::string(to_string(status));
    j["witnesses"] = witnesses;
    j["convention"] = convention;
    j["duration_ms"] = duration_ms;
    return j;
}

CheckReport CheckReport::from_json(const Json& j) {
    CheckReport r;
    r.check = j.at("check").get<std::string>();
    r.params = j.at("params");
    r.status = status_from_string(j.at("status").get<std::string>());
    r.witnesses = j.value("witnesses", Json::object());
    r.convention = j.value("convention", Json::object());
    r.duration_ms = j.value("duration_ms", std::int64_t{0});
    return r;
}

std::string CheckReport::csv_header() { return "check,status,params,witnesses,convention,duration_ms"; }

std::string CheckReport::to_csv_row() const {
    return csv_field(check) + "," + std::string(to_string(status)) + "," + csv_field(params.dump()) +
           "," + csv_field(witnesses.dump()) + "," + csv_field(convention.dump()) + "," +
           std::to_string(duration_ms);
}

}  // namespace stickel
