#include "netcent/params.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

#include "netcent/errors.hpp"

namespace netcent {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_real(std::string_view key, std::string_view s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
        throw_input("parameter " + std::string(key) + ": expected a real number, got '" +
                    std::string(s) + "'");
    return v;
}

std::uint64_t parse_uint(std::string_view key, std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw_input("parameter " + std::string(key) + ": expected a non-negative integer, got '" +
                    std::string(s) + "'");
    return v;
}

bool parse_bool(std::string_view key, std::string_view s) {
    if (s == "1" || s == "true" || s == "yes") return true;
    if (s == "0" || s == "false" || s == "no") return false;
    throw_input("parameter " + std::string(key) + ": expected a boolean, got '" + std::string(s) + "'");
}

struct Field {
    std::function<void(MetricParams&, std::string_view, std::string_view)> set;
    std::function<std::string(const MetricParams&)> show;
};

template <typename M>
Field size_field(M MetricParams::*m) {
    return {[m](MetricParams& p, std::string_view k, std::string_view v) {
                p.*m = static_cast<M>(parse_uint(k, v));
            },
            [m](const MetricParams& p) { return std::to_string(p.*m); }};
}

Field real_field(double MetricParams::*m) {
    return {[m](MetricParams& p, std::string_view k, std::string_view v) { p.*m = parse_real(k, v); },
            [m](const MetricParams& p) { return fmt(p.*m); }};
}

Field opt_field(std::optional<double> MetricParams::*m) {
    return {[m](MetricParams& p, std::string_view k, std::string_view v) { p.*m = parse_real(k, v); },
            [m](const MetricParams& p) { return (p.*m) ? fmt(*(p.*m)) : std::string("auto"); }};
}

Field bool_field(bool MetricParams::*m) {
    return {[m](MetricParams& p, std::string_view k, std::string_view v) { p.*m = parse_bool(k, v); },
            [m](const MetricParams& p) { return std::string(p.*m ? "true" : "false"); }};
}

const std::map<std::string, Field, std::less<>>& fields() {
    static const std::map<std::string, Field, std::less<>> table = {
        {"h", size_field(&MetricParams::h)},
        {"p", real_field(&MetricParams::p)},
        {"alpha", opt_field(&MetricParams::alpha)},
        {"beta", opt_field(&MetricParams::beta)},
        {"q", real_field(&MetricParams::q)},
        {"T", size_field(&MetricParams::T)},
        {"lambda_mdd", real_field(&MetricParams::lambda_mdd)},
        {"L", size_field(&MetricParams::L)},
        {"delta_decay", real_field(&MetricParams::delta_decay)},
        {"omega", opt_field(&MetricParams::omega)},
        {"r", size_field(&MetricParams::r)},
        {"tol", real_field(&MetricParams::tol)},
        {"max_iter", size_field(&MetricParams::max_iter)},
        {"si_beta", real_field(&MetricParams::si_beta)},
        {"si_steps", size_field(&MetricParams::si_steps)},
        {"si_runs", size_field(&MetricParams::si_runs)},
        {"sample_count", size_field(&MetricParams::sample_count)},
        {"rng_seed", size_field(&MetricParams::rng_seed)},
        {"order", size_field(&MetricParams::order)},
        {"k_max", size_field(&MetricParams::k_max)},
        {"ell", size_field(&MetricParams::ell)},
        {"normalized", bool_field(&MetricParams::normalized)},
        {"per_component", bool_field(&MetricParams::per_component)},
        {"out_neighbors", bool_field(&MetricParams::out_neighbors)},
        {"k", size_field(&MetricParams::k)},
        {"size_cap", size_field(&MetricParams::size_cap)},
        {"t_td", real_field(&MetricParams::t_td)},
        {"theta", real_field(&MetricParams::theta)},
        {"beta_inf", real_field(&MetricParams::beta_inf)},
        {"stop_at_threshold", bool_field(&MetricParams::stop_at_threshold)},
        {"benchmark",
         {[](MetricParams& p, std::string_view, std::string_view v) { p.benchmark = std::string(v); },
          [](const MetricParams& p) { return p.benchmark; }}},
        {"percolation_states",
         {[](MetricParams& p, std::string_view k, std::string_view v) {
              // comma-separated list
              std::vector<double> xs;
              std::size_t start = 0;
              while (start <= v.size()) {
                  std::size_t end = v.find(',', start);
                  if (end == std::string_view::npos) end = v.size();
                  xs.push_back(parse_real(k, v.substr(start, end - start)));
                  start = end + 1;
              }
              p.percolation_states = std::move(xs);
          },
          [](const MetricParams& p) {
              if (!p.percolation_states) return std::string("uniform");
              std::string s;
              for (double x : *p.percolation_states) s += (s.empty() ? "" : ",") + fmt(x);
              return s;
          }}},
    };
    return table;
}

} // namespace

void MetricParams::set(std::string_view key, std::string_view value) {
    auto it = fields().find(key);
    if (it == fields().end()) throw_input("unknown parameter '" + std::string(key) + "'");
    it->second.set(*this, key, value);
}

std::vector<std::string> MetricParams::keys() {
    std::vector<std::string> out;
    for (const auto& [k, f] : fields()) out.push_back(k);
    return out;
}

void MetricParams::validate() const {
    auto prob = [](const char* name, double v) {
        if (!(v >= 0.0 && v <= 1.0)) throw_input(std::string(name) + " must lie in [0,1]");
    };
    prob("p", p);
    prob("q", q);
    prob("lambda_mdd", lambda_mdd);
    prob("si_beta", si_beta);
    if (omega) prob("omega", *omega);
    if (!(tol > 0.0)) throw_input("tol must be positive");
    if (max_iter < 1) throw_input("max_iter must be at least 1");
    if (h < 1 || T < 1 || L < 1 || si_steps < 1 || order < 1 || k_max < 1 || ell < 1 || si_runs < 1 ||
        sample_count < 1)
        throw_input("h, T, L, order, k_max, ell, si_steps, si_runs and sample_count must be at least 1");
    if (r < 2) throw_input("r must be at least 2");
    if (k < 1) throw_input("k must be at least 1");
    if (t_td < 0 || theta < 0 || beta_inf < 0) throw_input("t_td, theta and beta_inf must be non-negative");
    if (!(delta_decay > 0.0 && delta_decay < 1.0)) throw_input("delta_decay must lie in (0,1)");
    if (percolation_states)
        for (double x : *percolation_states) prob("percolation state", x);
}

std::string MetricParams::digest() const {
    std::string out;
    for (const auto& [k, f] : fields()) {
        if (!out.empty()) out += ';';
        out += k + "=" + f.show(*this);
    }
    return out;
}

ScoreVector::ScoreVector(std::vector<double> v, std::string metric, std::string digest,
                         std::size_t skipped)
    : values(std::move(v)), metric_id(std::move(metric)), params_digest(std::move(digest)),
      skipped_pairs(skipped) {
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!std::isfinite(values[i]))
            throw_compute(metric_id + ": non-finite score at node " + std::to_string(i));
}

} // namespace netcent
