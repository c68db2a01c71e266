// SPDX-License-Identifier: Apache-2.0
//
// relay-mi: asymptotic mutual-information statistics of two-hop AF MIMO relay channels
// Copyright (C) 2026 The relay-mi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef relaymi_cli_H
#define relaymi_cli_H

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "config.hpp"
#include "covariance.hpp"
#include "errors.hpp"
#include "montecarlo.hpp"
#include "replica.hpp"

namespace relaymi
{

    enum class Command
    {
        solve,
        simulate,
        compare,
        sweep
    };

    enum class SweepParam
    {
        rho,
        alpha
    };

    struct RunSpec
    {
        Command command = Command::solve;
        std::string config_path;
        std::uint64_t samples = 20000;
        bool samples_given = false; // sweep adds MC columns only on explicit request
        std::uint64_t seed = 0;
        SweepParam sweep_param = SweepParam::rho;
        std::vector<double> sweep_values;
        std::string out_path;    // empty = stdout
        std::string dump_path;   // simulate only: one sample per line
        bool bits = false;       // divide nats by ln 2
        std::optional<S2Variant> variant_override;
    };

    struct RunOutput
    {
        std::string csv;
        bool ok = true; // false when any requested computation failed to converge
    };

    namespace detail
    {
        inline std::string trim(const std::string &s)
        {
            std::size_t b = 0, e = s.size();
            while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
                ++b;
            while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
                --e;
            return s.substr(b, e - b);
        }

        inline std::vector<std::string> split_ws(const std::string &s)
        {
            std::vector<std::string> out;
            std::istringstream iss(s);
            std::string tok;
            while (iss >> tok)
                out.push_back(tok);
            return out;
        }

        inline double parse_double(const std::string &s, unsigned line, const std::string &key)
        {
            const std::string t = trim(s);
            char *end = nullptr;
            const double v = std::strtod(t.c_str(), &end);
            if (t.empty() || end != t.c_str() + t.size())
                throw ParseError(line, key + ": malformed numeric value '" + t + "'");
            return v;
        }

        inline std::uint64_t parse_unsigned(const std::string &s, unsigned line, const std::string &key)
        {
            const std::string t = trim(s);
            char *end = nullptr;
            if (t.empty() || t[0] == '-')
                throw ParseError(line, key + ": malformed unsigned value '" + t + "'");
            const unsigned long long v = std::strtoull(t.c_str(), &end, 10);
            if (end != t.c_str() + t.size())
                throw ParseError(line, key + ": malformed unsigned value '" + t + "'");
            return v;
        }

        inline CovarianceSpec parse_covariance_value(const std::string &value, unsigned line,
                                                     const std::string &key)
        {
            const std::string v = trim(value);
            CovarianceSpec spec;
            if (v == "identity")
            {
                spec.kind = CovarianceSpec::Kind::identity;
                return spec;
            }
            const std::size_t sp = v.find_first_of(" \t");
            const std::string head = (sp == std::string::npos) ? v : v.substr(0, sp);
            const std::string rest = (sp == std::string::npos) ? "" : trim(v.substr(sp));
            if (head == "exponential")
            {
                if (rest.empty())
                    throw ParseError(line, key + ": exponential requires a coefficient");
                spec.kind = CovarianceSpec::Kind::exponential;
                spec.r = parse_double(rest, line, key);
                return spec;
            }
            if (head == "explicit")
            {
                if (rest.empty())
                    throw ParseError(line, key + ": explicit requires a file path");
                spec.kind = CovarianceSpec::Kind::explicit_file;
                spec.path = rest;
                return spec;
            }
            throw ParseError(line, key + ": unknown covariance kind '" + head + "'");
        }

        inline BeamformerSpec parse_beamformer_value(const std::string &value, unsigned line,
                                                     const std::string &key)
        {
            const std::string v = trim(value);
            BeamformerSpec spec;
            if (v == "identity")
            {
                spec.kind = BeamformerSpec::Kind::identity;
                return spec;
            }
            const std::size_t sp = v.find_first_of(" \t");
            const std::string head = (sp == std::string::npos) ? v : v.substr(0, sp);
            const std::string rest = (sp == std::string::npos) ? "" : trim(v.substr(sp));
            if (head == "explicit")
            {
                if (rest.empty())
                    throw ParseError(line, key + ": explicit requires a file path");
                spec.kind = BeamformerSpec::Kind::explicit_file;
                spec.path = rest;
                return spec;
            }
            throw ParseError(line, key + ": unknown beamformer kind '" + head + "'");
        }

        inline S2Variant parse_s2_variant(const std::string &value, unsigned line)
        {
            const std::string v = trim(value);
            if (v == "as_printed" || v == "printed")
                return S2Variant::as_printed;
            if (v == "scalar_consistent" || v == "consistent")
                return S2Variant::scalar_consistent;
            throw ParseError(line, "s2_variant: unknown value '" + v + "'");
        }

        inline void apply_config_key(ChannelConfig &cfg, std::set<std::string> &seen,
                                     const std::string &key, const std::string &value,
                                     unsigned line)
        {
            if (key.empty())
                throw ParseError(line, "empty key");
            if (!seen.insert(key).second)
                throw ParseError(line, "duplicate key '" + key + "'");
            if (key == "n_s")
                cfg.n_s = unsigned(parse_unsigned(value, line, key));
            else if (key == "n_r")
                cfg.n_r = unsigned(parse_unsigned(value, line, key));
            else if (key == "n_d")
                cfg.n_d = unsigned(parse_unsigned(value, line, key));
            else if (key == "rho")
                cfg.rho = parse_double(value, line, key);
            else if (key == "alpha")
                cfg.alpha = parse_double(value, line, key);
            else if (key == "cov_Ts")
                cfg.cov_Ts = parse_covariance_value(value, line, key);
            else if (key == "cov_Rr")
                cfg.cov_Rr = parse_covariance_value(value, line, key);
            else if (key == "cov_Tr")
                cfg.cov_Tr = parse_covariance_value(value, line, key);
            else if (key == "cov_Rd")
                cfg.cov_Rd = parse_covariance_value(value, line, key);
            else if (key == "precoder")
                cfg.precoder = parse_beamformer_value(value, line, key);
            else if (key == "forwarder")
                cfg.forwarder = parse_beamformer_value(value, line, key);
            else if (key == "s2_variant")
                cfg.s2_variant = parse_s2_variant(value, line);
            else if (key == "batch_size")
            {
                const std::uint64_t v = parse_unsigned(value, line, key);
                if (v < 1 || v > (1u << 30))
                    throw ParseError(line, "batch_size: must be in [1, 2^30]");
                cfg.batch_size = unsigned(v);
            }
            else
                throw ParseError(line, "unknown key '" + key + "'");
        }
    } // namespace detail

    // Flat key=value scenario text. A line whose whitespace tokens all contain
    // '=' carries one assignment per token; otherwise the whole line is a
    // single assignment split at the first '=' (values may contain spaces).
    // '#' starts a comment.
    inline ChannelConfig parse_config(const std::string &text)
    {
        ChannelConfig cfg;
        std::set<std::string> seen;
        std::istringstream iss(text);
        std::string raw;
        unsigned line_no = 0;
        while (std::getline(iss, raw))
        {
            ++line_no;
            const std::size_t hash = raw.find('#');
            if (hash != std::string::npos)
                raw = raw.substr(0, hash);
            const std::string line = detail::trim(raw);
            if (line.empty())
                continue;
            const std::vector<std::string> toks = detail::split_ws(line);
            bool all_assign = true;
            for (const std::string &t : toks)
                if (t.find('=') == std::string::npos)
                {
                    all_assign = false;
                    break;
                }
            if (all_assign)
            {
                for (const std::string &t : toks)
                {
                    const std::size_t eq = t.find('=');
                    detail::apply_config_key(cfg, seen, t.substr(0, eq), t.substr(eq + 1), line_no);
                }
            }
            else
            {
                const std::size_t eq = line.find('=');
                if (eq == std::string::npos)
                    throw ParseError(line_no, "expected key=value");
                detail::apply_config_key(cfg, seen, detail::trim(line.substr(0, eq)),
                                         detail::trim(line.substr(eq + 1)), line_no);
            }
        }
        for (const char *req : {"n_s", "n_r", "n_d", "rho", "alpha"})
            if (!seen.count(req))
                throw ParseError(0, std::string("missing required key '") + req + "'");
        cfg.validate();
        return cfg;
    }

    inline ChannelConfig load_config_file(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw ValidationError("cannot open config file: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse_config(ss.str());
    }

    namespace detail
    {
        // Decimal text with 15 significant digits; CSV schema requires >= 12.
        inline std::string fmt(double v)
        {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.15g", v);
            return buf;
        }

        inline std::string fmt_u(std::uint64_t v)
        {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%llu", static_cast<unsigned long long>(v));
            return buf;
        }

        inline std::string csv_safe(std::string s)
        {
            for (char &c : s)
                if (c == ',' || c == '\n' || c == '\r')
                    c = (c == ',') ? ';' : ' ';
            return s;
        }

        constexpr double kLn2 = 0.69314718055994530941723212145818;

        struct UnitScale
        {
            double mean, var, k3, k4;
        };

        inline UnitScale unit_scale(bool bits)
        {
            if (!bits)
                return {1.0, 1.0, 1.0, 1.0};
            const double l = kLn2;
            return {1.0 / l, 1.0 / (l * l), 1.0 / (l * l * l), 1.0 / (l * l * l * l)};
        }

        inline ChannelConfig resolve_config(const RunSpec &spec)
        {
            ChannelConfig cfg = load_config_file(spec.config_path);
            if (spec.variant_override)
            {
                cfg.s2_variant = *spec.variant_override;
                cfg.validate();
            }
            return cfg;
        }

        inline double rel_err(double approx, double reference)
        {
            return (approx - reference) / std::max(std::abs(reference), 1e-9);
        }
    } // namespace detail

    inline RunOutput run_solve(const RunSpec &spec, const ChannelConfig &cfg)
    {
        using detail::fmt;
        const detail::UnitScale u = detail::unit_scale(spec.bits);
        const ReplicaResult r = evaluate_replica(cfg);
        std::ostringstream os;
        os << "s1,s2,s3,t1,t2,t3,residual,iterations,"
           << (spec.bits ? "mean_bits,variance_bits2" : "mean_nats,variance_nats2")
           << ",logdet_V1,logdet_V2,logdet_V3\n";
        os << fmt(r.saddle.s1) << ',' << fmt(r.saddle.s2) << ',' << fmt(r.saddle.s3) << ','
           << fmt(r.saddle.t1) << ',' << fmt(r.saddle.t2) << ',' << fmt(r.saddle.t3) << ','
           << fmt(r.saddle.residual) << ',' << detail::fmt_u(r.saddle.iterations) << ','
           << fmt(r.mean_nats * u.mean) << ',' << fmt(r.variance_nats2 * u.var) << ','
           << fmt(r.logdet_V1) << ',' << fmt(r.logdet_V2) << ',' << fmt(r.logdet_V3) << '\n';
        return {os.str(), true};
    }

    inline RunOutput run_simulate(const RunSpec &spec, const ChannelConfig &cfg)
    {
        using detail::fmt;
        if (spec.samples < 4)
            throw ValidationError("simulate requires samples >= 4");
        const detail::UnitScale u = detail::unit_scale(spec.bits);
        const Covariances cov = effective_covariances(cfg);
        const bool keep = !spec.dump_path.empty();
        const MonteCarloResult mc = run_monte_carlo(cfg, cov, spec.samples, spec.seed, keep);
        if (keep)
        {
            std::ofstream dump(spec.dump_path, std::ios::binary);
            if (!dump)
                throw ValidationError("cannot open sample dump file: " + spec.dump_path);
            for (double x : mc.samples)
                dump << fmt(x * u.mean) << '\n';
        }
        const CumulantEstimate &c = mc.cumulants;
        std::ostringstream os;
        os << "mc_k1,mc_se1,mc_k2,mc_se2,mc_k3,mc_k4,count\n";
        os << fmt(c.k1 * u.mean) << ',' << fmt(c.se1 * u.mean) << ',' << fmt(c.k2 * u.var) << ','
           << fmt(c.se2 * u.var) << ',' << fmt(c.k3 * u.k3) << ',' << fmt(c.k4 * u.k4) << ','
           << detail::fmt_u(c.count) << '\n';
        return {os.str(), true};
    }

    inline RunOutput run_compare(const RunSpec &spec, const ChannelConfig &cfg)
    {
        using detail::fmt;
        if (spec.samples < 4)
            throw ValidationError("compare requires samples >= 4");
        const detail::UnitScale u = detail::unit_scale(spec.bits);
        const Covariances cov = effective_covariances(cfg);
        const ReplicaResult r = evaluate_replica(cfg, cov);
        const MonteCarloResult mc = run_monte_carlo(cfg, cov, spec.samples, spec.seed, true);
        const CumulantEstimate &c = mc.cumulants;
        const double ks = (r.variance_nats2 > 0.0)
                              ? ks_distance(mc.samples, r.mean_nats, r.variance_nats2)
                              : std::nan("");
        std::ostringstream os;
        os << "replica_mean,replica_variance,mc_k1,mc_se1,mc_k2,mc_se2,mc_k3,mc_k4,"
              "mean_rel_err,var_rel_err,ks_distance\n";
        os << fmt(r.mean_nats * u.mean) << ',' << fmt(r.variance_nats2 * u.var) << ','
           << fmt(c.k1 * u.mean) << ',' << fmt(c.se1 * u.mean) << ',' << fmt(c.k2 * u.var) << ','
           << fmt(c.se2 * u.var) << ',' << fmt(c.k3 * u.k3) << ',' << fmt(c.k4 * u.k4) << ','
           << fmt(detail::rel_err(r.mean_nats, c.k1)) << ','
           << fmt(detail::rel_err(r.variance_nats2, c.k2)) << ',' << fmt(ks) << '\n';
        return {os.str(), true};
    }

    inline RunOutput run_sweep(const RunSpec &spec, const ChannelConfig &base)
    {
        using detail::fmt;
        if (spec.sweep_values.empty())
            throw ValidationError("sweep requires at least one value");
        const bool with_mc = spec.samples_given && spec.samples > 0;
        if (with_mc && spec.samples < 4)
            throw ValidationError("sweep with Monte Carlo requires samples >= 4");
        const detail::UnitScale u = detail::unit_scale(spec.bits);
        const std::string pname = (spec.sweep_param == SweepParam::rho) ? "rho" : "alpha";
        std::ostringstream os;
        os << "param,value," << (spec.bits ? "mean_bits,variance_bits2" : "mean_nats,variance_nats2");
        if (with_mc)
            os << ",mc_k1,mc_k2";
        os << ",status\n";
        bool all_ok = true;
        for (double value : spec.sweep_values)
        {
            ChannelConfig cfg = base;
            if (spec.sweep_param == SweepParam::rho)
                cfg.rho = value;
            else
                cfg.alpha = value;
            os << pname << ',' << fmt(value) << ',';
            try
            {
                cfg.validate();
                const Covariances cov = effective_covariances(cfg);
                const ReplicaResult r = evaluate_replica(cfg, cov);
                os << fmt(r.mean_nats * u.mean) << ',' << fmt(r.variance_nats2 * u.var);
                if (with_mc)
                {
                    const MonteCarloResult mc = run_monte_carlo(cfg, cov, spec.samples, spec.seed);
                    os << ',' << fmt(mc.cumulants.k1 * u.mean) << ',' << fmt(mc.cumulants.k2 * u.var);
                }
                os << ",ok\n";
            }
            catch (const std::exception &e)
            {
                all_ok = false;
                os << ',';
                if (with_mc)
                    os << ",,";
                os << "error: " << detail::csv_safe(e.what()) << '\n';
            }
        }
        return {os.str(), all_ok};
    }

    // Loads the config named by the spec and dispatches on the subcommand.
    inline RunOutput run(const RunSpec &spec)
    {
        const ChannelConfig cfg = detail::resolve_config(spec);
        switch (spec.command)
        {
        case Command::solve:
            return run_solve(spec, cfg);
        case Command::simulate:
            return run_simulate(spec, cfg);
        case Command::compare:
            return run_compare(spec, cfg);
        case Command::sweep:
            return run_sweep(spec, cfg);
        }
        throw ValidationError("unknown command");
    }

} // namespace relaymi

#endif
