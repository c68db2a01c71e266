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

#ifndef relaymi_replica_H
#define relaymi_replica_H

#include <armadillo>
#include <array>
#include <cmath>

#include "config.hpp"
#include "covariance.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "saddle.hpp"

namespace relaymi
{

    // The 18 quadratic-form coefficients of the three Hessian blocks.
    // v1[0..11] belong to the numerator block, v2[0..1] to the denominator
    // block, v3[0..3] to the coupling block.
    struct VCoefficients
    {
        std::array<double, 12> v1{};
        std::array<double, 2> v2{};
        std::array<double, 4> v3{};
    };

    // Full deterministic-equivalent evaluation for one scenario.
    struct ReplicaResult
    {
        double mean_nats = 0;
        double variance_nats2 = 0;
        VCoefficients coeffs;
        double logdet_V1 = 0;
        double logdet_V2 = 0;
        double logdet_V3 = 0;
        SaddlePoint saddle;
    };

    // Asymptotic mean in nats. Six terms: four log-determinants in natural
    // dimensions, one in the embedding dimension m = max(n_r, n_d), minus the
    // coupling term. No half-duplex pre-log is applied.
    inline double mean_mutual_information(const ChannelConfig &cfg, const Covariances &cov,
                                          const SaddlePoint &p,
                                          Corner corner = Corner::top_left)
    {
        const unsigned m = std::max(cfg.n_r, cfg.n_d);
        const arma::cx_mat A = (cfg.s2_variant == S2Variant::scalar_consistent)
                                   ? identity_embed(cov.Rr, m, corner)
                                   : star_embed(cov.Rr, m, corner);
        const arma::cx_mat B = star_embed(cov.Rd, m, corner);
        const arma::cx_mat I_ns(arma::eye(cfg.n_s, cfg.n_s), arma::zeros(cfg.n_s, cfg.n_s));
        const arma::cx_mat I_nr(arma::eye(cfg.n_r, cfg.n_r), arma::zeros(cfg.n_r, cfg.n_r));
        const arma::cx_mat I_nd(arma::eye(cfg.n_d, cfg.n_d), arma::zeros(cfg.n_d, cfg.n_d));
        const arma::cx_mat I_m(arma::eye(m, m), arma::zeros(m, m));

        const double term1 = lndet_hermitian_pd(I_ns + cfg.rho * p.s1 * cov.Ts,
                                                "mean term 1 (source transmit)");
        const double term2 = lndet_hermitian_pd(I_nr + cfg.alpha * p.s2 * cov.Tr,
                                                "mean term 2 (relay transmit, numerator)");
        const double term3 = lndet_hermitian_pd(I_nr + cfg.alpha * p.s3 * cov.Tr,
                                                "mean term 3 (relay transmit, denominator)");
        const double term4 = lndet_hermitian_pd(I_nd + p.t3 * cov.Rd,
                                                "mean term 4 (destination receive)");
        // The fifth operand mixes two Hermitian factors and is not Hermitian
        // itself; its determinant is positive at the physical fixed point.
        const double term5 = logabsdet(I_m + p.t2 * B + p.t1 * p.t2 * A * B,
                                       "mean term 5 (embedded coupling)");
        const double coupling = cfg.n_s * p.s1 * p.t1 + cfg.n_r * p.s2 * p.t2 - cfg.n_r * p.s3 * p.t3;
        return term1 + term2 - term3 - term4 + term5 - coupling;
    }

    // Evaluates all 18 v-coefficients at the fixed point. The v3 block is the
    // coupling Hessian: as_printed uses the single-trace forms with the relay
    // transmit operand zero-embedded to dimension m; scalar_consistent splits
    // the first coefficient into its natural n_r-dimensional trace and keeps
    // the remaining three in resolvent form.
    inline VCoefficients variance_coefficients(const ChannelConfig &cfg, const Covariances &cov,
                                               const SaddlePoint &p,
                                               Corner corner = Corner::top_left)
    {
        const unsigned n_s = cfg.n_s, n_r = cfg.n_r, n_d = cfg.n_d;
        const unsigned m = std::max(n_r, n_d);
        const double rho = cfg.rho, alpha = cfg.alpha;
        const double s1 = p.s1, s2 = p.s2, s3 = p.s3, t1 = p.t1, t2 = p.t2, t3 = p.t3;

        const arma::cx_mat A = (cfg.s2_variant == S2Variant::scalar_consistent)
                                   ? identity_embed(cov.Rr, m, corner)
                                   : star_embed(cov.Rr, m, corner);
        const arma::cx_mat B = star_embed(cov.Rd, m, corner);
        const arma::cx_mat AB = A * B;
        const arma::cx_mat I_ns(arma::eye(n_s, n_s), arma::zeros(n_s, n_s));
        const arma::cx_mat I_nr(arma::eye(n_r, n_r), arma::zeros(n_r, n_r));
        const arma::cx_mat I_nd(arma::eye(n_d, n_d), arma::zeros(n_d, n_d));
        const arma::cx_mat I_m(arma::eye(m, m), arma::zeros(m, m));

        arma::cx_mat W;
        if (!arma::inv(W, I_m + t1 * t2 * AB + t2 * B))
            throw NumericError("variance coefficients: singular coupling resolvent");
        const arma::cx_mat G = I_m + t2 * B;
        const arma::cx_mat K = I_m + t1 * t2 * AB;

        const arma::cx_mat P1 = rho * cov.Ts * arma::inv(I_ns + rho * s1 * cov.Ts);
        const arma::cx_mat P2 = alpha * cov.Tr * arma::inv(I_nr + alpha * s2 * cov.Tr);
        const arma::cx_mat P3 = alpha * cov.Tr * arma::inv(I_nr + alpha * s3 * cov.Tr);
        const arma::cx_mat P4 = cov.Rd * arma::inv(I_nd + t3 * cov.Rd);

        VCoefficients v;
        const arma::cx_mat GW = G * W;
        const arma::cx_mat BW = B * W;
        const arma::cx_mat ABW = AB * W;
        const arma::cx_mat ABGW = AB * GW;
        const arma::cx_mat ABBW = AB * BW;

        v.v1[0] = real_trace(P1 * P1) / (double(n_s) * n_s);
        v.v1[1] = real_trace(P2 * P2) / (double(n_r) * n_r);
        v.v1[2] = -real_trace(AB * GW * GW);
        v.v1[3] = -real_trace(A * (t2 * BW) * (t2 * BW));
        v.v1[4] = real_trace((t1 * ABGW) * (t1 * ABGW));
        v.v1[5] = real_trace((t1 * t2 * ABBW) * (t1 * t2 * ABBW));
        v.v1[6] = real_trace(((B + t1 * t2 * AB * B) * W) * ((B + t1 * t2 * AB * B) * W));
        v.v1[7] = real_trace(t2 * AB * B * GW * W);
        v.v1[8] = -real_trace(t2 * B * G * (t1 * ABW) * (t1 * ABW));
        v.v1[9] = real_trace(t1 * AB * B * G * K * W * W);
        v.v1[10] = -real_trace(t1 * t2 * AB * B * K * W * W);
        v.v1[11] = real_trace((t2 * ABW) * (t2 * ABW));

        v.v2[0] = real_trace(P3 * P3) / (double(n_r) * n_r);
        v.v2[1] = real_trace(P4 * P4);

        arma::cx_mat J3;
        if (!arma::inv(J3, I_m + t3 * B))
            throw NumericError("variance coefficients: singular denominator resolvent (v3 block)");
        if (cfg.s2_variant == S2Variant::scalar_consistent)
        {
            const arma::cx_mat Jr2 = arma::inv(I_nr + alpha * s2 * cov.Tr);
            const arma::cx_mat Jr3 = arma::inv(I_nr + alpha * s3 * cov.Tr);
            v.v3[0] = real_trace((alpha * cov.Tr * Jr2) * (alpha * cov.Tr * Jr3)) / n_r;
            v.v3[1] = real_trace(B * J3 * B * (t1 * t2 * AB) * W) / n_r;
            v.v3[2] = real_trace(B * J3 * B * K * W) / n_r;
            v.v3[3] = real_trace(B * J3 * B * (t1 * A + t1 * t2 * AB) * W) / n_r;
        }
        else
        {
            const arma::cx_mat T2s = star_embed(cov.Tr, m, corner);
            const arma::cx_mat Js2 = arma::inv(I_m + alpha * s2 * T2s);
            const arma::cx_mat Js3 = arma::inv(I_m + alpha * s3 * T2s);
            v.v3[0] = alpha * real_trace(B * T2s * J3 * Js2) / n_r;
            v.v3[1] = t1 * t2 * real_trace(B * T2s * A * B * W * Js3) / n_r;
            v.v3[2] = real_trace(B * T2s * K * W * Js3) / n_r;
            v.v3[3] = real_trace(B * T2s * (t1 * A + t1 * t2 * AB) * W * Js3) / n_r;
        }
        for (double x : v.v1)
            if (!std::isfinite(x))
                throw NumericError("variance coefficients: non-finite v1 entry");
        for (double x : v.v2)
            if (!std::isfinite(x))
                throw NumericError("variance coefficients: non-finite v2 entry");
        for (double x : v.v3)
            if (!std::isfinite(x))
                throw NumericError("variance coefficients: non-finite v3 entry");
        return v;
    }

    namespace detail
    {
        // V1 rows and columns pair up as (R,Q) slots for the five numerator
        // order parameters; unit entries tie each pair together.
        inline arma::mat assemble_V1(const VCoefficients &v)
        {
            const double v1 = v.v1[0], v2 = v.v1[1], v3 = v.v1[2], v4 = v.v1[3];
            const double v5 = v.v1[4], v6 = v.v1[5], v7 = v.v1[6], v8 = v.v1[7];
            const double v9 = v.v1[8], v10 = v.v1[9], v11 = v.v1[10], v12 = v.v1[11];
            arma::mat M(10, 10, arma::fill::zeros);
            M(0, 0) = v1;
            M(0, 1) = 1;
            M(1, 0) = 1;
            M(1, 1) = v12;
            M(1, 3) = v3;
            M(1, 5) = v8;
            M(1, 7) = v8;
            M(1, 9) = v4;
            for (unsigned r : {2u, 4u, 6u, 8u})
                for (unsigned c : {2u, 4u, 6u, 8u})
                    M(r, c) = v2;
            M(2, 3) = 1;
            M(4, 5) = 1;
            M(6, 7) = 1;
            M(8, 9) = 1;
            M(3, 1) = v3;
            M(3, 2) = 1;
            M(3, 3) = v5;
            M(3, 5) = v9;
            M(3, 7) = v9;
            M(3, 9) = v6;
            M(5, 1) = v8;
            M(5, 3) = v9;
            M(5, 4) = 1;
            M(5, 5) = v6;
            M(5, 7) = v10;
            M(5, 9) = v11;
            M(7, 1) = v8;
            M(7, 3) = v9;
            M(7, 5) = v10;
            M(7, 6) = 1;
            M(7, 7) = v6;
            M(7, 9) = v11;
            M(9, 1) = v4;
            M(9, 3) = v6;
            M(9, 5) = v11;
            M(9, 7) = v11;
            M(9, 8) = 1;
            M(9, 9) = v7;
            return M;
        }

        inline arma::mat assemble_V2(const VCoefficients &v)
        {
            return arma::mat{{v.v2[0], 1.0}, {1.0, v.v2[1]}};
        }

        inline arma::mat assemble_V3(const VCoefficients &v)
        {
            const double a = v.v3[0], b = v.v3[1], c = v.v3[2], d = v.v3[3];
            return arma::mat{{1, -a, 0, a}, {-d, 1, b, 0}, {0, a, -1, -a}, {b, 0, -c, -1}};
        }
    } // namespace detail

    // Assembles the three Hessian blocks from the v-coefficients and returns
    // the log-absolute-determinants. variance = -ld1 - ld2 + 2*ld3.
    struct VarianceParts
    {
        double logdet_V1 = 0;
        double logdet_V2 = 0;
        double logdet_V3 = 0;
        double variance_nats2 = 0;
    };

    inline VarianceParts variance_mutual_information(const VCoefficients &v)
    {
        VarianceParts out;
        out.logdet_V1 = logabsdet_real(detail::assemble_V1(v), "variance block V1");
        const double det2 = v.v2[0] * v.v2[1] - 1.0;
        if (det2 == 0.0 || !std::isfinite(det2))
            throw NumericError("variance block V2: degenerate Hessian");
        out.logdet_V2 = std::log(std::abs(det2));
        out.logdet_V3 = logabsdet_real(detail::assemble_V3(v), "variance block V3");
        out.variance_nats2 = -out.logdet_V1 - out.logdet_V2 + 2.0 * out.logdet_V3;
        if (!std::isfinite(out.variance_nats2))
            throw NumericError("variance assembly: non-finite result");
        return out;
    }

    // End-to-end evaluation: saddle point, mean, coefficients, variance.
    inline ReplicaResult evaluate_replica(const ChannelConfig &cfg, const Covariances &cov,
                                          Corner corner = Corner::top_left)
    {
        ReplicaResult r;
        r.saddle = solve_saddle(cfg, cov, corner);
        r.mean_nats = mean_mutual_information(cfg, cov, r.saddle, corner);
        r.coeffs = variance_coefficients(cfg, cov, r.saddle, corner);
        const VarianceParts parts = variance_mutual_information(r.coeffs);
        r.logdet_V1 = parts.logdet_V1;
        r.logdet_V2 = parts.logdet_V2;
        r.logdet_V3 = parts.logdet_V3;
        r.variance_nats2 = parts.variance_nats2;
        return r;
    }

    inline ReplicaResult evaluate_replica(const ChannelConfig &cfg, Corner corner = Corner::top_left)
    {
        return evaluate_replica(cfg, effective_covariances(cfg), corner);
    }

} // namespace relaymi

#endif
