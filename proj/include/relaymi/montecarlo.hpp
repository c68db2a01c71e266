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

#ifndef relaymi_montecarlo_H
#define relaymi_montecarlo_H

#include <algorithm>
#include <armadillo>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "config.hpp"
#include "covariance.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "rng.hpp"

namespace relaymi
{

    struct ChannelSample
    {
        arma::cx_mat H1; // n_r x n_s
        arma::cx_mat H2; // n_d x n_r
    };

    struct CumulantEstimate
    {
        double k1 = 0, k2 = 0, k3 = 0, k4 = 0;
        double se1 = 0, se2 = 0;
        std::uint64_t count = 0;
    };

    // White ZMCSCG matrix; entry at column-major linear index l consumes
    // counter words [offset + 2l, offset + 2l + 1].
    inline arma::cx_mat sample_white_gaussian(unsigned rows, unsigned cols, const SeededRng &g,
                                              std::uint64_t counter_offset = 0)
    {
        arma::cx_mat M(rows, cols);
        for (std::uint64_t l = 0; l < std::uint64_t(rows) * cols; ++l)
            M(l % rows, l / rows) = rng_complex_normal(g, counter_offset + 2 * l);
        return M;
    }

    // Colors white matrices by the Hermitian square roots of the effective
    // covariances. Stream = sample index; H1 consumes the counter range before H2.
    class ChannelSampler
    {
      public:
        ChannelSampler(const ChannelConfig &cfg, const Covariances &cov)
            : n_s_(cfg.n_s), n_r_(cfg.n_r), n_d_(cfg.n_d),
              rt_Rr_(sqrtm_hermitian_pd(cov.Rr, "relay receive covariance")),
              rt_Ts_(sqrtm_hermitian_pd(cov.Ts, "source transmit covariance")),
              rt_Rd_(sqrtm_hermitian_pd(cov.Rd, "destination receive covariance")),
              rt_Tr_(sqrtm_hermitian_pd(cov.Tr, "relay transmit covariance"))
        {
        }

        ChannelSample operator()(const SeededRng &g) const
        {
            const std::uint64_t words_h1 = 2ull * n_r_ * n_s_;
            ChannelSample s;
            s.H1 = rt_Rr_ * sample_white_gaussian(n_r_, n_s_, g, 0) * rt_Ts_;
            s.H2 = rt_Rd_ * sample_white_gaussian(n_d_, n_r_, g, words_h1) * rt_Tr_;
            return s;
        }

      private:
        unsigned n_s_, n_r_, n_d_;
        arma::cx_mat rt_Rr_, rt_Ts_, rt_Rd_, rt_Tr_;
    };

    inline ChannelSample sample_channels(const ChannelConfig &cfg, const Covariances &cov,
                                         const SeededRng &g)
    {
        return ChannelSampler(cfg, cov)(g);
    }

    // Per-realization mutual information in nats, no half-duplex pre-log.
    // Both determinant arguments are Hermitian PD by construction.
    inline double mutual_information_sample(const ChannelConfig &cfg, const ChannelSample &s)
    {
        const arma::cx_mat I_nd(arma::eye(cfg.n_d, cfg.n_d), arma::zeros(cfg.n_d, cfg.n_d));
        const arma::cx_mat Q = (cfg.alpha / cfg.n_r) * s.H2 * s.H2.t();
        const arma::cx_mat H2H1 = s.H2 * s.H1;
        const arma::cx_mat S = (cfg.rho * cfg.alpha / (double(cfg.n_s) * cfg.n_r)) * H2H1 * H2H1.t();
        const double num = lndet_hermitian_pd(I_nd + Q + S, "mutual information numerator");
        const double den = lndet_hermitian_pd(I_nd + Q, "mutual information denominator");
        return num - den;
    }

    // Additive sufficient statistics; merging is plain summation, so any
    // fixed merge order reproduces bit-for-bit.
    struct PowerSums
    {
        double s1 = 0, s2 = 0, s3 = 0, s4 = 0;
        std::uint64_t n = 0;

        void add(double x)
        {
            const double x2 = x * x;
            s1 += x;
            s2 += x2;
            s3 += x2 * x;
            s4 += x2 * x2;
            n += 1;
        }
        void merge(const PowerSums &o)
        {
            s1 += o.s1;
            s2 += o.s2;
            s3 += o.s3;
            s4 += o.s4;
            n += o.n;
        }
    };

    // Unbiased k-statistics from raw power sums. k4 needs at least 4 samples
    // and stays zero below that; k1..k3 need at least 3.
    inline CumulantEstimate cumulants_from_sums(const PowerSums &ps)
    {
        if (ps.n < 3)
            throw ValidationError("cumulant estimation requires at least 3 samples");
        const double n = double(ps.n);
        const double S1 = ps.s1, S2 = ps.s2, S3 = ps.s3, S4 = ps.s4;
        CumulantEstimate c;
        c.count = ps.n;
        c.k1 = S1 / n;
        c.k2 = std::max(0.0, (n * S2 - S1 * S1) / (n * (n - 1)));
        c.k3 = (n * n * S3 - 3 * n * S1 * S2 + 2 * S1 * S1 * S1) / (n * (n - 1) * (n - 2));
        if (ps.n >= 4)
            c.k4 = (-6 * S1 * S1 * S1 * S1 + 12 * n * S1 * S1 * S2 - 3 * n * (n - 1) * S2 * S2 -
                    4 * n * (n + 1) * S1 * S3 + n * n * (n + 1) * S4) /
                   (n * (n - 1) * (n - 2) * (n - 3));
        c.se1 = std::sqrt(c.k2 / n);
        c.se2 = c.k2 * std::sqrt(2.0 / (n - 1));
        return c;
    }

    inline CumulantEstimate estimate_cumulants(const std::vector<double> &samples)
    {
        PowerSums ps;
        for (double x : samples)
            ps.add(x);
        return cumulants_from_sums(ps);
    }

    // Right-continuous empirical CDF over sorted samples.
    class Ecdf
    {
      public:
        explicit Ecdf(std::vector<double> samples) : sorted_(std::move(samples))
        {
            if (sorted_.empty())
                throw ValidationError("empirical CDF requires at least one sample");
            std::sort(sorted_.begin(), sorted_.end());
        }

        double operator()(double x) const
        {
            const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
            return double(it - sorted_.begin()) / double(sorted_.size());
        }

        const std::vector<double> &sorted() const { return sorted_; }

      private:
        std::vector<double> sorted_;
    };

    inline double gaussian_cdf(double x, double mean, double variance)
    {
        return 0.5 * std::erfc(-(x - mean) / std::sqrt(2.0 * variance));
    }

    // Sup-norm ECDF vs Gaussian distance, evaluated at the pre/post jump
    // points of every sample.
    inline double ks_distance(const std::vector<double> &samples, double mean, double variance)
    {
        if (samples.empty())
            throw ValidationError("KS distance requires at least one sample");
        if (!(variance > 0.0))
            throw ValidationError("KS distance requires positive variance");
        std::vector<double> v = samples;
        std::sort(v.begin(), v.end());
        const double n = double(v.size());
        double d = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i)
        {
            const double F = gaussian_cdf(v[i], mean, variance);
            d = std::max(d, std::abs(double(i + 1) / n - F));
            d = std::max(d, std::abs(double(i) / n - F));
        }
        return d;
    }

    struct MonteCarloResult
    {
        CumulantEstimate cumulants;
        std::vector<double> samples; // populated only when requested
    };

    // Batched estimation: sample i is a pure function of (seed, i); batches of
    // config.batch_size are merged in index order, so the result is identical
    // for any thread count.
    inline MonteCarloResult run_monte_carlo(const ChannelConfig &cfg, const Covariances &cov,
                                            std::uint64_t n_samples, std::uint64_t seed,
                                            bool keep_samples = false, unsigned n_threads = 0)
    {
        if (n_samples < 4)
            throw ValidationError("Monte Carlo run requires at least 4 samples");
        const ChannelSampler sampler(cfg, cov);
        const std::uint64_t bs = cfg.batch_size;
        const std::uint64_t n_batches = (n_samples + bs - 1) / bs;
        std::vector<PowerSums> batch_sums(n_batches);

        MonteCarloResult out;
        if (keep_samples)
            out.samples.assign(n_samples, 0.0);

        auto run_batch = [&](std::uint64_t b) {
            const std::uint64_t lo = b * bs;
            const std::uint64_t hi = std::min(n_samples, lo + bs);
            PowerSums ps;
            for (std::uint64_t i = lo; i < hi; ++i)
            {
                const double mi = mutual_information_sample(cfg, sampler({seed, i}));
                ps.add(mi);
                if (keep_samples)
                    out.samples[i] = mi;
            }
            batch_sums[b] = ps;
        };

        if (n_threads == 0)
            n_threads = std::max(1u, std::thread::hardware_concurrency());
        n_threads = unsigned(std::min<std::uint64_t>(n_threads, n_batches));
        if (n_threads <= 1)
        {
            for (std::uint64_t b = 0; b < n_batches; ++b)
                run_batch(b);
        }
        else
        {
            std::vector<std::thread> pool;
            pool.reserve(n_threads);
            for (unsigned t = 0; t < n_threads; ++t)
                pool.emplace_back([&, t] {
                    for (std::uint64_t b = t; b < n_batches; b += n_threads)
                        run_batch(b);
                });
            for (auto &th : pool)
                th.join();
        }

        PowerSums total;
        for (const PowerSums &ps : batch_sums)
            total.merge(ps);
        out.cumulants = cumulants_from_sums(total);
        return out;
    }

} // namespace relaymi

#endif
