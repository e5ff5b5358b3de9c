#include "stickel/cli.hpp"

#include <algorithm>
#include <condition_variable>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "stickel/arith.hpp"
#include "stickel/class_annihilators.hpp"
#include "stickel/gauss_jacobi.hpp"
#include "stickel/group_ring.hpp"
#include "stickel/regularity.hpp"
#include "stickel/report.hpp"
#include "stickel/tables.hpp"

namespace stickel {

namespace {

struct Options {
    std::optional<int> p;
    std::optional<std::int64_t> q;
    std::optional<std::string> h;
    std::optional<std::int64_t> v;
    std::optional<std::int64_t> u;
    std::optional<std::int64_t> a;
    std::optional<std::int64_t> b;
    std::optional<std::int64_t> delta;
    std::optional<int> k;
    std::optional<std::string> r;
    std::optional<std::string> alpha;
    std::optional<std::string> p_range;
    std::int64_t q_max = 200;
    std::string task = "gauss";
    std::optional<std::string> out_file;
    bool no_cache = false;
    bool csv = false;
    bool json = false;
};

using Reports = std::vector<CheckReport>;

/// A unit of work with a cache identity.
struct Job {
    std::string key;
    std::function<Reports()> fn;
};

int need_p(const Options& o) {
    if (!o.p) throw UsageError("-p is required");
    if (*o.p < 3 || !is_prime(static_cast<std::int64_t>(*o.p))) throw UsageError("-p must be an odd prime");
    return *o.p;
}

std::int64_t need_q(const Options& o) {
    if (!o.q) throw UsageError("-q is required");
    return *o.q;
}

mpz_class need_h(const Options& o) {
    if (!o.h) throw UsageError("--h is required");
    mpz_class h;
    if (h.set_str(*o.h, 10) != 0 || h < 2) throw UsageError("--h must be an integer >= 2");
    return h;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw UsageError("--p-range expects A..B");
    try {
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (lo > hi) throw UsageError("--p-range is empty");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("--p-range expects integers, got '" + text + "'");
    }
}

Reports gauss_reports(int p, std::int64_t q, std::optional<std::int64_t> u, std::optional<std::int64_t> v) {
    const GaussSumParams gp = GaussSumParams::make(p, q, u, v);
    Reports out{gauss_structure(gp)};
    if (gp.f == 1) {
        Stopwatch clock;
        CheckReport r = gp_plus_1_check(gp, gauss_sum_explicit(gp));
        r.duration_ms = clock.elapsed_ms();
        out.push_back(std::move(r));
    }
    return out;
}

Reports delta_g_reports(int p, std::int64_t q, std::optional<std::int64_t> u, std::optional<std::int64_t> v) {
    return {delta_g_report(GaussSumParams::make(p, q, u, v))};
}

Reports psi_reports(int p, std::int64_t q, std::optional<std::int64_t> u, std::int64_t a, std::int64_t b,
                    std::optional<int> k) {
    const std::int64_t uu = u.value_or(smallest_primitive_root(q));
    if (!is_primitive_root(uu, q)) throw UsageError("--u must be a primitive root mod q");
    Reports out{psi_report(p, q, uu, a, b)};
    if (k) out.push_back(power_sum_check(p, q, uu, a, b, *k));
    return out;
}

Reports singular_reports(const Options& o) {
    const int p = need_p(o);
    if (!o.alpha) throw UsageError("--alpha c0,c1,... is required");
    const std::int64_t q = o.q.value_or(0);
    const CycInt A = pow(parse_cyc(p, *o.alpha), static_cast<std::uint64_t>(p));
    if (q != 0 && mod(q, p) == 1) {
        const GaussSumParams gp = GaussSumParams::make(p, q, o.u, o.v);
        const BiCycInt g = gauss_sum_explicit(gp);
        return {singular_padic_profile(A, q, gp.v, &g)};
    }
    return {singular_padic_profile(A, q, o.v)};
}

/// One job per scan item, in a fixed order.
std::vector<Job> scan_jobs(const Options& o) {
    const auto [lo, hi] = parse_range(o.p_range.value_or("5..13"));
    std::vector<Job> jobs;
    auto add = [&](Json params, std::function<Reports()> fn) {
        jobs.push_back({"scan:" + o.task + ":" + params.dump(), std::move(fn)});
    };
    const auto ps = primes_between(std::max(lo, 3), hi);
    const auto qs = primes_between(3, o.q_max);
    const std::string& t = o.task;
    for (const auto p64 : ps) {
        const int p = static_cast<int>(p64);
        if (t == "gauss" || t == "gp-plus-1" || t == "delta-g" || t == "psi") {
            for (const auto q : qs) {
                if (q == p) continue;
                const bool split = mod(q, p) == 1;
                const Json params = {{"p", p}, {"q", q}};
                if (t == "gauss") {
                    add(params, [p, q] { return gauss_reports(p, q, std::nullopt, std::nullopt); });
                } else if (!split) {
                    continue;
                } else if (t == "gp-plus-1") {
                    add(params, [p, q] {
                        const GaussSumParams gp = GaussSumParams::make(p, q);
                        Stopwatch clock;
                        CheckReport r = gp_plus_1_check(gp, gauss_sum_explicit(gp));
                        r.duration_ms = clock.elapsed_ms();
                        return Reports{r};
                    });
                } else if (t == "delta-g") {
                    add(params, [p, q] { return delta_g_reports(p, q, std::nullopt, std::nullopt); });
                } else {
                    add(params, [p, q] { return psi_reports(p, q, std::nullopt, 1, -2, std::nullopt); });
                }
            }
        } else if (t == "pq-identity") {
            for (std::int64_t v = 2; v < p; ++v) {
                if (!is_primitive_root(v, p)) continue;
                add({{"p", p}, {"v", v}}, [p, v] { return Reports{verify_PQ_identity(p, v)}; });
            }
        } else if (t == "regular") {
            add({{"p", p}}, [p] { return Reports{regular_check(p).to_report()}; });
        } else if (t == "b-half" || t == "quad-class") {
            if (p % 4 != 3 || p < 7) continue;
            if (t == "b-half") {
                add({{"p", p}}, [p] { return Reports{b_half_check(p)}; });
            } else {
                add({{"p", p}}, [p] { return Reports{quad_class_report(p)}; });
            }
        } else if (t == "biquadratic") {
            if (p % 8 != 5) continue;
            add({{"p", p}}, [p] { return Reports{biquadratic_report(p)}; });
        } else if (t == "f-gt1") {
            for (const auto q : qs) {
                if (q == p || multiplicative_order(q, p) == 1) continue;
                add({{"p", p}, {"q", q}}, [p, q] { return Reports{f_gt1_congruences(p, q)}; });
            }
        } else {
            throw UsageError("unknown scan task '" + t +
                             "' (gauss, gp-plus-1, delta-g, psi, pq-identity, regular, b-half, "
                             "quad-class, biquadratic, f-gt1)");
        }
    }
    return jobs;
}

/// The job list for a non-scan subcommand: always exactly one job.
Job single_job(const std::string& cmd, const Options& o) {
    Json params = Json::object();
    std::function<Reports()> fn;
    if (cmd == "gauss") {
        const int p = need_p(o);
        const std::int64_t q = need_q(o);
        params = {{"p", p}, {"q", q}};
        fn = [=] { return gauss_reports(p, q, o.u, o.v); };
    } else if (cmd == "psi") {
        const int p = need_p(o);
        const std::int64_t q = need_q(o);
        const std::int64_t a = o.a.value_or(1);
        const std::int64_t b = o.b.value_or(-2);
        params = {{"p", p}, {"q", q}, {"a", a}, {"b", b}};
        if (o.k) params["k"] = *o.k;
        fn = [=] { return psi_reports(p, q, o.u, a, b, o.k); };
    } else if (cmd == "delta-g") {
        const int p = need_p(o);
        const std::int64_t q = need_q(o);
        params = {{"p", p}, {"q", q}};
        fn = [=] { return delta_g_reports(p, q, o.u, o.v); };
    } else if (cmd == "regular-check") {
        const int p = need_p(o);
        params = {{"p", p}};
        fn = [=] {
            Reports out{regular_check(p, o.v).to_report()};
            if (p % 4 == 3 && p >= 7) out.push_back(b_half_check(p, o.v));
            return out;
        };
    } else if (cmd == "quad-class") {
        const int p = need_p(o);
        params = {{"p", p}};
        fn = [=] {
            Reports out{quad_class_report(p, o.v), odd_subsum_report(p, o.v)};
            if (o.delta) out.push_back(i_delta_report(p, *o.delta, o.v));
            return out;
        };
        if (o.delta) params["delta"] = *o.delta;
    } else if (cmd == "annihilator") {
        const int p = need_p(o);
        const mpz_class h = need_h(o);
        params = {{"p", p}, {"h", dec(h)}};
        fn = [=] {
            // Use the shipped row when there is one, so nu and d are checked too.
            const auto rows = load_annihilator_examples(data_dir() + "/annihilator_examples.csv");
            for (const auto& row : rows) {
                if (row.p == p && row.h == h) return Reports{annihilator_check(row, o.v)};
            }
            if (!is_prime(h)) throw UsageError("--h must be prime");
            const mpz_class d_big = gcd(mpz_class(h - 1), mpz_class(p - 1));
            const AnnihilatorExample ex{p, h, std::nullopt, 1, d_big.get_si(), std::nullopt};
            return Reports{annihilator_check(ex, o.v)};
        };
    } else if (cmd == "biquadratic") {
        const int p = need_p(o);
        params = {{"p", p}};
        fn = [=] { return Reports{biquadratic_report(p, o.v)}; };
    } else if (cmd == "f-gt1") {
        const int p = need_p(o);
        const std::int64_t q = need_q(o);
        params = {{"p", p}, {"q", q}};
        fn = [=] { return Reports{f_gt1_congruences(p, q, o.v)}; };
    } else if (cmd == "principal-prime") {
        const int p = need_p(o);
        const std::int64_t a = o.a.value_or(1);
        params = {{"p", p}, {"a", a}};
        if (o.r) params["r"] = *o.r;
        fn = [=] {
            if (o.r) return Reports{principal_prime_test(p, a, parse_cyc(p, *o.r))};
            return principal_prime_scan(p, a, 3);
        };
    } else if (cmd == "singular-profile") {
        const int p = need_p(o);
        params = {{"p", p}, {"q", o.q.value_or(0)}, {"alpha", o.alpha.value_or("")}};
        fn = [=] { return singular_reports(o); };
    } else if (cmd == "verify-tables") {
        params = {{"dir", "data"}};
        fn = [] { return verify_tables(data_dir()); };
    } else {
        throw UsageError("unknown command " + cmd);
    }
    if (o.v) params["v"] = *o.v;
    if (o.u) params["u"] = *o.u;
    return {cmd + ":" + params.dump(), std::move(fn)};
}

/// Cached report lines keyed by cache_key, in file order.
std::map<std::string, Reports> load_cache(const std::string& path) {
    std::map<std::string, Reports> cache;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Json j = Json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.contains("cache_key")) continue;
        const std::string key = j["cache_key"].get<std::string>();
        j.erase("cache_key");
        cache[key].push_back(CheckReport::from_json(j));
    }
    return cache;
}

class Emitter {
public:
    Emitter(std::ostream& out, bool csv) : out_(out), csv_(csv) {}

    void emit(const CheckReport& r) {
        if (csv_) {
            if (!header_done_) out_ << CheckReport::csv_header() << '\n';
            header_done_ = true;
            out_ << r.to_csv_row() << '\n';
        } else {
            out_ << r.to_json().dump() << '\n';
        }
        out_.flush();
        any_fail_ = any_fail_ || r.failed();
    }
    bool any_fail() const { return any_fail_; }

private:
    std::ostream& out_;
    bool csv_;
    bool header_done_ = false;
    bool any_fail_ = false;
};

/// Runs jobs on a bounded pool; results are emitted by the calling thread
/// in job order, so output is independent of scheduling.
void execute(const std::vector<Job>& jobs, const Options& o, Emitter& emitter) {
    std::map<std::string, Reports> cache;
    if (o.out_file && !o.no_cache) cache = load_cache(*o.out_file);
    std::ofstream cache_out;
    if (o.out_file) {
        cache_out.open(*o.out_file, std::ios::app);
        if (!cache_out) throw UsageError("cannot open " + *o.out_file + " for appending");
    }

    const std::size_t n = jobs.size();
    std::vector<std::optional<Reports>> results(n);
    std::vector<std::exception_ptr> errors(n);
    std::vector<bool> cached(n, false);
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < n; ++i) {
        if (auto it = cache.find(jobs[i].key); it != cache.end()) {
            results[i] = it->second;
            cached[i] = true;
        } else {
            pending.push_back(i);
        }
    }

    std::mutex mu;
    std::condition_variable cv;
    std::size_t next = 0;
    auto worker = [&] {
        for (;;) {
            std::size_t idx;
            {
                std::lock_guard lock(mu);
                if (next == pending.size()) return;
                idx = pending[next++];
            }
            std::optional<Reports> res;
            std::exception_ptr err;
            try {
                res = jobs[idx].fn();
            } catch (...) {
                err = std::current_exception();
            }
            {
                std::lock_guard lock(mu);
                results[idx] = std::move(res);
                errors[idx] = err;
                if (!results[idx]) results[idx] = Reports{};
            }
            cv.notify_all();
        }
    };
    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t nthreads = std::min(hw, pending.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);

    std::exception_ptr first_error;
    for (std::size_t i = 0; i < n; ++i) {
        Reports batch;
        std::exception_ptr err;
        {
            std::unique_lock lock(mu);
            cv.wait(lock, [&] { return results[i].has_value(); });
            batch = *results[i];
            err = errors[i];
        }
        if (err) {
            first_error = err;
            break;
        }
        for (const auto& r : batch) {
            emitter.emit(r);
            if (cache_out.is_open() && !cached[i]) {
                Json j = r.to_json();
                j["cache_key"] = jobs[i].key;
                cache_out << j.dump() << '\n';
            }
        }
        cache_out.flush();
    }
    if (first_error) {
        {
            std::lock_guard lock(mu);
            next = pending.size();
        }
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

const std::vector<std::pair<std::string, std::string>> kCommands = {
    {"gauss", "Gauss sum structure checks for one (p, q)"},
    {"psi", "cyclotomic function psi_{a,b} and the resolvent identity"},
    {"delta-g", "pi-adic valuation of sigma(g) - (-1)^(v-1) g^v"},
    {"regular-check", "odd roots of Q(X) mod p against Bernoulli numbers"},
    {"quad-class", "imaginary quadratic class number identities"},
    {"annihilator", "gcd(P, T) mod h and its roots"},
    {"biquadratic", "biquadratic sum S for p = 5 mod 8"},
    {"f-gt1", "S_2 congruences for residue degree f > 1"},
    {"principal-prime", "norms of a + lambda^(p+1) r"},
    {"singular-profile", "valuations of A^P -+ 1 and the case analysis on q"},
    {"scan", "batch a task over a range of p (and q)"},
    {"verify-tables", "recompute the shipped reference tables"},
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact Stickelberger and Gauss sum checks over Q(zeta_p)", "stickel"};
    app.set_help_flag("--help", "Print help and exit");
    app.require_subcommand(1, 1);
    app.add_option("-p", o.p, "odd prime p");
    app.add_option("-q", o.q, "prime q");
    app.add_option("--h", o.h, "prime modulus h (decimal, any size)");
    app.add_option("--v", o.v, "primitive root mod p");
    app.add_option("--u", o.u, "primitive root mod q");
    app.add_option("--a", o.a, "first psi index, or the rational part a");
    app.add_option("--b", o.b, "second psi index");
    app.add_option("--delta", o.delta, "delta for the I_delta sum");
    app.add_option("--k", o.k, "power-sum exponent");
    app.add_option("--r", o.r, "coefficients c0,c1,... of r in powers of zeta");
    app.add_option("--alpha", o.alpha, "coefficients c0,c1,... of alpha in powers of zeta");
    app.add_option("--p-range", o.p_range, "scan range A..B");
    app.add_option("--q-max", o.q_max, "largest q in a scan");
    app.add_option("--task", o.task, "scan task");
    app.add_option("--out", o.out_file, "JSON-lines results cache");
    app.add_flag("--no-cache", o.no_cache, "ignore cached results");
    auto* json_flag = app.add_flag("--json", o.json, "JSON-lines output (default)");
    auto* csv_flag = app.add_flag("--csv", o.csv, "CSV output");
    json_flag->excludes(csv_flag);
    for (const auto& [name, desc] : kCommands) {
        auto* sc = app.add_subcommand(name, desc);
        sc->set_help_flag("--help", "Print help and exit");
        sc->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
        return kExitUsage;
    }

    try {
        const std::string cmd = app.get_subcommands().front()->get_name();
        std::vector<Job> jobs;
        if (cmd == "scan") {
            jobs = scan_jobs(o);
        } else {
            jobs.push_back(single_job(cmd, o));
        }
        Emitter emitter(out, o.csv);
        execute(jobs, o, emitter);
        return emitter.any_fail() ? kExitFailedCheck : kExitOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace stickel
