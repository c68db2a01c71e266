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

#include <catch2/catch_amalgamated.hpp>

#include <relaymi/covariance.hpp>
#include <relaymi/saddle.hpp>

using namespace relaymi;

namespace
{
    ChannelConfig identity_config(unsigned n, double rho, double alpha,
                                  S2Variant variant = S2Variant::scalar_consistent)
    {
        ChannelConfig cfg;
        cfg.n_s = cfg.n_r = cfg.n_d = n;
        cfg.rho = rho;
        cfg.alpha = alpha;
        cfg.s2_variant = variant;
        return cfg;
    }
} // namespace

TEST_CASE("silent source zeroes t1 and merges the two relay pairs")
{
    for (double alpha : {0.5, 1.0, 4.0})
    {
        const ChannelConfig cfg = identity_config(3, 0.0, alpha);
        const SaddlePoint p = solve_saddle(cfg, effective_covariances(cfg));
        REQUIRE(p.t1 == Catch::Approx(0.0).margin(1e-12));
        REQUIRE(p.s2 == Catch::Approx(p.s3).margin(1e-10));
        REQUIRE(p.t2 == Catch::Approx(p.t3).margin(1e-10));
    }
}

TEST_CASE("silent source at unit gain hits the golden-ratio fixed point")
{
    const ChannelConfig cfg = identity_config(4, 0.0, 1.0);
    const SaddlePoint p = solve_saddle(cfg, effective_covariances(cfg));
    REQUIRE(p.t2 == Catch::Approx(0.618033988749895).margin(1e-9));
    REQUIRE(p.t3 == Catch::Approx(0.618033988749895).margin(1e-9));
}

TEST_CASE("identity equal-dimension solution is independent of the antenna count")
{
    const ChannelConfig c2 = identity_config(2, 1.0, 1.0);
    const ChannelConfig c8 = identity_config(8, 1.0, 1.0);
    const SaddlePoint p2 = solve_saddle(c2, effective_covariances(c2));
    const SaddlePoint p8 = solve_saddle(c8, effective_covariances(c8));
    REQUIRE(p8.s1 == Catch::Approx(p2.s1).margin(1e-10));
    REQUIRE(p8.s2 == Catch::Approx(p2.s2).margin(1e-10));
    REQUIRE(p8.s3 == Catch::Approx(p2.s3).margin(1e-10));
    REQUIRE(p8.t1 == Catch::Approx(p2.t1).margin(1e-10));
    REQUIRE(p8.t2 == Catch::Approx(p2.t2).margin(1e-10));
    REQUIRE(p8.t3 == Catch::Approx(p2.t3).margin(1e-10));
}

TEST_CASE("returned point satisfies the six equations under independent re-evaluation")
{
    for (double rho : {0.1, 1.0, 10.0})
        for (double alpha : {0.5, 2.0})
        {
            const ChannelConfig cfg = identity_config(4, rho, alpha);
            const Covariances cov = effective_covariances(cfg);
            const SaddlePoint p = solve_saddle(cfg, cov);
            REQUIRE(p.residual < 1e-10);
            REQUIRE(saddle_residual(cfg, cov, p) < 1e-10);
            // A perturbed point must register a worse residual.
            SaddlePoint q = p;
            q.s1 += 1e-3;
            REQUIRE(saddle_residual(cfg, cov, q) > 1e-5);
        }
}

TEST_CASE("solution values are finite and nonnegative with diagnostics populated")
{
    ChannelConfig cfg = identity_config(4, 2.0, 1.5);
    cfg.cov_Rr.kind = CovarianceSpec::Kind::exponential;
    cfg.cov_Rr.r = 0.5;
    cfg.cov_Rd.kind = CovarianceSpec::Kind::exponential;
    cfg.cov_Rd.r = 0.3;
    const SaddlePoint p = solve_saddle(cfg, effective_covariances(cfg));
    for (double v : {p.s1, p.s2, p.s3, p.t1, p.t2, p.t3})
    {
        REQUIRE(std::isfinite(v));
        REQUIRE(v >= 0.0);
    }
    REQUIRE(p.iterations > 0);
    REQUIRE(p.iterations <= 10000);
    REQUIRE(p.residual < 1e-10);
}

TEST_CASE("unequal relay and destination arrays solve with exact rational anchors")
{
    // At n_s=2, n_r=4, n_d=6, rho=alpha=1 the decoupled pair has the closed
    // form s3 = 1, t3 = 1/2.
    ChannelConfig cfg;
    cfg.n_s = 2;
    cfg.n_r = 4;
    cfg.n_d = 6;
    cfg.rho = 1.0;
    cfg.alpha = 1.0;
    const SaddlePoint p = solve_saddle(cfg, effective_covariances(cfg));
    REQUIRE(p.s3 == Catch::Approx(1.0).margin(1e-9));
    REQUIRE(p.t3 == Catch::Approx(0.5).margin(1e-9));
    REQUIRE(p.s1 == Catch::Approx(0.749305201542816).margin(1e-8));
    REQUIRE(p.s2 == Catch::Approx(1.43205349330316).margin(1e-8));
    REQUIRE(p.t1 == Catch::Approx(0.571655534504755).margin(1e-8));
    REQUIRE(p.t2 == Catch::Approx(0.411175166481196).margin(1e-8));
}

TEST_CASE("printed variant solves to its own fixed point")
{
    const ChannelConfig cfg = identity_config(4, 1.0, 1.0, S2Variant::as_printed);
    const SaddlePoint p = solve_saddle(cfg, effective_covariances(cfg));
    REQUIRE(p.s1 == Catch::Approx(0.280776406404433).margin(1e-8));
    REQUIRE(p.s2 == Catch::Approx(0.780776406404471).margin(1e-8));
    REQUIRE(p.residual < 1e-10);
}

TEST_CASE("corner choice does not move the fixed point for Toeplitz correlations")
{
    ChannelConfig cfg;
    cfg.n_s = 3;
    cfg.n_r = 4;
    cfg.n_d = 6;
    cfg.rho = 1.0;
    cfg.alpha = 1.0;
    cfg.cov_Rr.kind = CovarianceSpec::Kind::exponential;
    cfg.cov_Rr.r = 0.5;
    cfg.cov_Rd.kind = CovarianceSpec::Kind::exponential;
    cfg.cov_Rd.r = 0.4;
    const Covariances cov = effective_covariances(cfg);
    const SaddlePoint tl = solve_saddle(cfg, cov, Corner::top_left);
    const SaddlePoint br = solve_saddle(cfg, cov, Corner::bottom_right);
    REQUIRE(br.s1 == Catch::Approx(tl.s1).margin(1e-10));
    REQUIRE(br.s2 == Catch::Approx(tl.s2).margin(1e-10));
    REQUIRE(br.t1 == Catch::Approx(tl.t1).margin(1e-10));
    REQUIRE(br.t2 == Catch::Approx(tl.t2).margin(1e-10));
}
