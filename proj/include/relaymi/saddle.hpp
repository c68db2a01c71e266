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

#ifndef relaymi_saddle_H
#define relaymi_saddle_H

#include <armadillo>
#include <cmath>

#include "config.hpp"
#include "covariance.hpp"
#include "errors.hpp"
#include "linalg.hpp"

namespace relaymi
{

    // Solution of the six-equation fixed-point system.
    struct SaddlePoint
    {
        double s1 = 0, s2 = 0, s3 = 0;
        double t1 = 0, t2 = 0, t3 = 0;
        double residual = 0;     // max relative residual of the six equations
        unsigned iterations = 0; // total damped sweeps spent
    };

    // Scalar identity-covariance equal-dimension reduction.
    struct ScalarSaddle
    {
        double q1 = 0, q2 = 0, q8 = 0;
        double r1 = 0, r2_tilde = 0, r8 = 0;
    };

    namespace detail
    {
        constexpr double kDamping = 0.5;
        constexpr double kInit = 1.0;
        constexpr unsigned kMaxIterations = 10000;
        constexpr double kUpdateTol = 1e-12;
        constexpr double kResidualTol = 1e-10;

        inline double rel_delta(double next, double prev)
        {
            return std::abs(next - prev) / std::max(1.0, std::abs(next));
        }

        inline double rel_mismatch(double lhs, double rhs)
        {
            return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
        }

        // Fixed operands of the six update maps for one scenario. The relay
        // receive correlation is embedded with identity padding for the
        // scalar_consistent variant (it acts trivially on destination modes
        // outside the relay span) and with zero padding for as_printed.
        struct SaddleOperands
        {
            unsigned n_s, n_r, n_d, m;
            double rho, alpha;
            S2Variant variant;
            arma::cx_mat Ts, Tr, Rd_nat; // natural-dimension operands
            arma::cx_mat A, B;           // embedded relay/destination receive operands
            arma::cx_mat AB;             // cached A*B
            arma::cx_mat I_ns, I_nr, I_nd, I_m;

            SaddleOperands(const ChannelConfig &cfg, const Covariances &cov, Corner corner)
            {
                n_s = cfg.n_s;
                n_r = cfg.n_r;
                n_d = cfg.n_d;
                m = std::max(n_r, n_d);
                rho = cfg.rho;
                alpha = cfg.alpha;
                variant = cfg.s2_variant;
                Ts = cov.Ts;
                Tr = cov.Tr;
                Rd_nat = cov.Rd;
                A = (variant == S2Variant::scalar_consistent)
                        ? identity_embed(cov.Rr, m, corner)
                        : star_embed(cov.Rr, m, corner);
                B = star_embed(cov.Rd, m, corner);
                AB = A * B;
                I_ns = arma::cx_mat(arma::eye(n_s, n_s), arma::zeros(n_s, n_s));
                I_nr = arma::cx_mat(arma::eye(n_r, n_r), arma::zeros(n_r, n_r));
                I_nd = arma::cx_mat(arma::eye(n_d, n_d), arma::zeros(n_d, n_d));
                I_m = arma::cx_mat(arma::eye(m, m), arma::zeros(m, m));
            }

            double map_t1(double s1) const
            {
                return real_trace(rho * Ts * arma::inv(I_ns + rho * s1 * Ts)) / n_s;
            }
            double map_t2(double s2) const
            {
                return real_trace(alpha * Tr * arma::inv(I_nr + alpha * s2 * Tr)) / n_r;
            }
            double map_t3(double s3) const { return map_t2(s3); }
            double map_s3(double t3) const
            {
                return real_trace(Rd_nat * arma::inv(I_nd + t3 * Rd_nat)) / n_r;
            }
            arma::cx_mat resolvent(double t1, double t2) const
            {
                return arma::inv(I_m + t1 * t2 * AB + t2 * B);
            }
            double map_s1(const arma::cx_mat &W, double t2) const
            {
                return real_trace(t2 * AB * W) / n_s;
            }
            double map_s2(const arma::cx_mat &W, double t1, double t2) const
            {
                const arma::cx_mat N = (variant == S2Variant::scalar_consistent)
                                           ? arma::cx_mat(B + t1 * AB)
                                           : arma::cx_mat(A + t2 * AB);
                return real_trace(N * W) / n_r;
            }
        };

        // Max relative residual of the six equations, evaluated from scratch.
        inline double residual_of(const SaddleOperands &op, const SaddlePoint &p)
        {
            const arma::cx_mat W = op.resolvent(p.t1, p.t2);
            double r = 0.0;
            r = std::max(r, rel_mismatch(p.t1, op.map_t1(p.s1)));
            r = std::max(r, rel_mismatch(p.t2, op.map_t2(p.s2)));
            r = std::max(r, rel_mismatch(p.t3, op.map_t3(p.s3)));
            r = std::max(r, rel_mismatch(p.s1, op.map_s1(W, p.t2)));
            r = std::max(r, rel_mismatch(p.s2, op.map_s2(W, p.t1, p.t2)));
            r = std::max(r, rel_mismatch(p.s3, op.map_s3(p.t3)));
            return r;
        }
    } // namespace detail

    // Solves the six-equation system by damped fixed-point iteration. The
    // (s3,t3) pair decouples from the rest and is solved first. Convergence
    // requires both a small update and a small independently evaluated residual.
    inline SaddlePoint solve_saddle(const ChannelConfig &cfg, const Covariances &cov,
                                    Corner corner = Corner::top_left)
    {
        using namespace detail;
        const SaddleOperands op(cfg, cov, corner);
        SaddlePoint p;
        unsigned spent = 0;

        double s3 = kInit, t3 = kInit;
        for (; spent < kMaxIterations; ++spent)
        {
            const double t3n = (1 - kDamping) * t3 + kDamping * op.map_t3(s3);
            const double s3n = (1 - kDamping) * s3 + kDamping * op.map_s3(t3n);
            if (!std::isfinite(s3n) || !std::isfinite(t3n))
                throw NumericError("saddle solver: non-finite value in (s3,t3) iteration");
            const double upd = std::max(rel_delta(t3n, t3), rel_delta(s3n, s3));
            s3 = s3n;
            t3 = t3n;
            if (upd < kUpdateTol)
                break;
        }

        double s1 = kInit, s2 = kInit, t1 = kInit, t2 = kInit;
        bool converged = false;
        for (; spent < kMaxIterations; ++spent)
        {
            const double t1n = (1 - kDamping) * t1 + kDamping * op.map_t1(s1);
            const double t2n = (1 - kDamping) * t2 + kDamping * op.map_t2(s2);
            const arma::cx_mat W = op.resolvent(t1n, t2n);
            const double s1n = (1 - kDamping) * s1 + kDamping * op.map_s1(W, t2n);
            const double s2n = (1 - kDamping) * s2 + kDamping * op.map_s2(W, t1n, t2n);
            if (!std::isfinite(s1n) || !std::isfinite(s2n) || !std::isfinite(t1n) || !std::isfinite(t2n))
                throw NumericError("saddle solver: non-finite value in (s1,s2,t1,t2) iteration");
            const double upd = std::max(std::max(rel_delta(t1n, t1), rel_delta(t2n, t2)),
                                        std::max(rel_delta(s1n, s1), rel_delta(s2n, s2)));
            s1 = s1n;
            s2 = s2n;
            t1 = t1n;
            t2 = t2n;
            if (upd < kUpdateTol)
            {
                p = {s1, s2, s3, t1, t2, t3, 0.0, spent + 1};
                p.residual = residual_of(op, p);
                if (p.residual < kResidualTol)
                {
                    converged = true;
                    break;
                }
            }
        }
        if (!converged)
        {
            p = {s1, s2, s3, t1, t2, t3, 0.0, spent};
            p.residual = residual_of(op, p);
            throw ConvergenceError("saddle solver: no convergence after " +
                                       std::to_string(kMaxIterations) + " iterations",
                                   p.residual);
        }
        return p;
    }

    // Re-evaluates the six-equation residual at an arbitrary point,
    // independently of the iteration loop.
    inline double saddle_residual(const ChannelConfig &cfg, const Covariances &cov,
                                  const SaddlePoint &p, Corner corner = Corner::top_left)
    {
        const detail::SaddleOperands op(cfg, cov, corner);
        return detail::residual_of(op, p);
    }

    // Solves the scalar identity-covariance equal-dimension system
    //   q1 = rho/(1+rho r1),   q2 = alpha/(1+alpha r2~),  q8 = alpha/(1+alpha r8),
    //   r1 = q2/(1+q1q2+q2),   r2~ = (1+q1)/(1+q1q2+q2),  r8 = 1/(1+q8).
    inline ScalarSaddle scalar_saddle(double rho, double alpha)
    {
        using namespace detail;
        if (!(rho >= 0.0))
            throw ValidationError("scalar_saddle: rho must be >= 0");
        if (!(alpha > 0.0))
            throw ValidationError("scalar_saddle: alpha must be > 0");
        double q1 = kInit, q2 = kInit, q8 = kInit, r1 = kInit, rt2 = kInit, r8 = kInit;
        bool converged = false;
        for (unsigned it = 0; it < kMaxIterations; ++it)
        {
            const double q1n = (1 - kDamping) * q1 + kDamping * rho / (1 + rho * r1);
            const double q2n = (1 - kDamping) * q2 + kDamping * alpha / (1 + alpha * rt2);
            const double q8n = (1 - kDamping) * q8 + kDamping * alpha / (1 + alpha * r8);
            const double r1n = (1 - kDamping) * r1 + kDamping * q2n / (1 + q1n * q2n + q2n);
            const double rt2n = (1 - kDamping) * rt2 + kDamping * (1 + q1n) / (1 + q1n * q2n + q2n);
            const double r8n = (1 - kDamping) * r8 + kDamping / (1 + q8n);
            const double upd = std::max({rel_delta(q1n, q1), rel_delta(q2n, q2), rel_delta(q8n, q8),
                                         rel_delta(r1n, r1), rel_delta(rt2n, rt2), rel_delta(r8n, r8)});
            q1 = q1n;
            q2 = q2n;
            q8 = q8n;
            r1 = r1n;
            rt2 = rt2n;
            r8 = r8n;
            if (upd < 1e-14)
            {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw ConvergenceError("scalar saddle: no convergence", 1.0);
        return {q1, q2, q8, r1, rt2, r8};
    }

    // Max relative residual of the scalar system at a given point.
    inline double scalar_residual(double rho, double alpha, const ScalarSaddle &s)
    {
        using detail::rel_mismatch;
        double r = 0.0;
        r = std::max(r, rel_mismatch(s.q1, rho / (1 + rho * s.r1)));
        r = std::max(r, rel_mismatch(s.q2, alpha / (1 + alpha * s.r2_tilde)));
        r = std::max(r, rel_mismatch(s.q8, alpha / (1 + alpha * s.r8)));
        r = std::max(r, rel_mismatch(s.r1, s.q2 / (1 + s.q1 * s.q2 + s.q2)));
        r = std::max(r, rel_mismatch(s.r2_tilde, (1 + s.q1) / (1 + s.q1 * s.q2 + s.q2)));
        r = std::max(r, rel_mismatch(s.r8, 1.0 / (1 + s.q8)));
        return r;
    }

    // Scalar per-scenario mean: n times the per-antenna leading term.
    inline double scalar_mean(double rho, double alpha, unsigned n)
    {
        const ScalarSaddle s = scalar_saddle(rho, alpha);
        return n * (std::log(1 + rho * s.r1) + std::log(1 + alpha * s.r2_tilde) +
                    std::log(1 + s.q2 + s.q1 * s.q2) - std::log(1 + alpha * s.r8) -
                    std::log(1 + s.q8) - (s.r1 * s.q1 + s.r2_tilde * s.q2 - s.r8 * s.q8));
    }

} // namespace relaymi

#endif
