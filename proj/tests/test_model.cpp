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

#include <cstdio>
#include <fstream>
#include <sstream>

#include <relaymi/complexio.hpp>
#include <relaymi/config.hpp>
#include <relaymi/covariance.hpp>

using namespace relaymi;

namespace
{
    arma::cx_mat real_mat(std::initializer_list<std::initializer_list<double>> rows)
    {
        arma::mat R(rows);
        return arma::cx_mat(R, arma::zeros(arma::size(R)));
    }

    std::string write_temp(const std::string &name, const std::string &content)
    {
        const std::string path = "test_fixture_" + name;
        std::ofstream f(path, std::ios::binary);
        f << content;
        return path;
    }
} // namespace

TEST_CASE("config validation rejects out-of-domain fields")
{
    ChannelConfig cfg;
    cfg.n_s = cfg.n_r = cfg.n_d = 2;
    cfg.rho = 1.0;
    cfg.alpha = 1.0;
    REQUIRE_NOTHROW(cfg.validate());

    ChannelConfig bad = cfg;
    bad.n_s = 0;
    REQUIRE_THROWS_WITH(bad.validate(), Catch::Matchers::ContainsSubstring("n_s"));
    bad = cfg;
    bad.rho = -0.5;
    REQUIRE_THROWS_WITH(bad.validate(), Catch::Matchers::ContainsSubstring("rho"));
    bad = cfg;
    bad.alpha = 0.0;
    REQUIRE_THROWS_WITH(bad.validate(), Catch::Matchers::ContainsSubstring("alpha"));
    bad = cfg;
    bad.cov_Rr.kind = CovarianceSpec::Kind::exponential;
    bad.cov_Rr.r = 1.0;
    REQUIRE_THROWS_WITH(bad.validate(), Catch::Matchers::ContainsSubstring("cov_Rr"));
}

TEST_CASE("build_covariance identity and exponential kinds")
{
    CovarianceSpec id;
    const CorrelationMatrix I3 = build_covariance(id, 3);
    REQUIRE(arma::norm(I3.entries - real_mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), "inf") == 0.0);

    CovarianceSpec ex;
    ex.kind = CovarianceSpec::Kind::exponential;
    ex.r = 0.5;
    const CorrelationMatrix E2 = build_covariance(ex, 2);
    REQUIRE(arma::norm(E2.entries - real_mat({{1, 0.5}, {0.5, 1}}), "inf") < 1e-15);

    ex.r = 0.0;
    const CorrelationMatrix E4 = build_covariance(ex, 4);
    REQUIRE(arma::norm(E4.entries - arma::cx_mat(arma::eye(4, 4), arma::zeros(4, 4)), "inf") == 0.0);
}

TEST_CASE("build_covariance output passes all structural checks")
{
    for (unsigned dim : {1u, 2u, 3u, 5u, 8u})
        for (double r : {0.0, 0.2, 0.5, 0.9, 0.99})
        {
            CovarianceSpec ex;
            ex.kind = CovarianceSpec::Kind::exponential;
            ex.r = r;
            const CorrelationMatrix C = build_covariance(ex, dim);
            REQUIRE_NOTHROW(validate_correlation(C.entries, dim, true, "property"));
        }
}

TEST_CASE("explicit covariance files are validated structurally")
{
    SECTION("valid Hermitian complex matrix loads")
    {
        const std::string p = write_temp("herm_ok.txt",
                                         "1.2 0.3+0.1i\n0.3-0.1i 0.8\n");
        CovarianceSpec spec;
        spec.kind = CovarianceSpec::Kind::explicit_file;
        spec.path = p;
        const CorrelationMatrix C = build_covariance(spec, 2, "cov_Rr");
        REQUIRE(C.dim() == 2);
        REQUIRE(C.entries(0, 1) == std::complex<double>(0.3, 0.1));
        std::remove(p.c_str());
    }
    SECTION("non-Hermitian input is rejected by name")
    {
        const std::string p = write_temp("herm_bad.txt", "1 0.4\n0.3 1\n");
        CovarianceSpec spec;
        spec.kind = CovarianceSpec::Kind::explicit_file;
        spec.path = p;
        REQUIRE_THROWS_WITH(build_covariance(spec, 2, "cov_Rr"),
                            Catch::Matchers::ContainsSubstring("Hermitian"));
        std::remove(p.c_str());
    }
    SECTION("trace violation is rejected by name")
    {
        const std::string p = write_temp("trace_bad.txt", "1.5 0\n0 1\n");
        CovarianceSpec spec;
        spec.kind = CovarianceSpec::Kind::explicit_file;
        spec.path = p;
        REQUIRE_THROWS_WITH(build_covariance(spec, 2, "cov_Ts"),
                            Catch::Matchers::ContainsSubstring("trace"));
        std::remove(p.c_str());
    }
    SECTION("indefinite input is rejected")
    {
        const std::string p = write_temp("pd_bad.txt", "1 2\n2 1\n");
        CovarianceSpec spec;
        spec.kind = CovarianceSpec::Kind::explicit_file;
        spec.path = p;
        REQUIRE_THROWS_WITH(build_covariance(spec, 2, "cov_Rd"),
                            Catch::Matchers::ContainsSubstring("positive definite"));
        std::remove(p.c_str());
    }
    SECTION("wrong dimension is rejected")
    {
        const std::string p = write_temp("dim_bad.txt", "1 0\n0 1\n");
        CovarianceSpec spec;
        spec.kind = CovarianceSpec::Kind::explicit_file;
        spec.path = p;
        REQUIRE_THROWS_WITH(build_covariance(spec, 3, "cov_Tr"),
                            Catch::Matchers::ContainsSubstring("dimension"));
        std::remove(p.c_str());
    }
}

TEST_CASE("fold_forwarder identity and explicit cases")
{
    const CorrelationMatrix I2{real_mat({{1, 0}, {0, 1}})};
    const arma::cx_mat F_id = real_mat({{1, 0}, {0, 1}});
    REQUIRE(arma::norm(fold_forwarder(I2, F_id).entries - I2.entries, "inf") == 0.0);

    const CorrelationMatrix D{real_mat({{1.5, 0}, {0, 0.5}})};
    REQUIRE(arma::norm(fold_forwarder(D, F_id).entries - D.entries, "inf") == 0.0);

    const arma::cx_mat F = real_mat({{std::sqrt(1.5), 0}, {0, std::sqrt(0.5)}});
    REQUIRE(arma::norm(fold_forwarder(I2, F).entries - D.entries, "inf") < 1e-15);
}

TEST_CASE("identity forwarder preserves any valid correlation exactly")
{
    for (double r : {0.0, 0.3, 0.7})
    {
        CovarianceSpec ex;
        ex.kind = CovarianceSpec::Kind::exponential;
        ex.r = r;
        const CorrelationMatrix T = build_covariance(ex, 4);
        const arma::cx_mat F = arma::cx_mat(arma::eye(4, 4), arma::zeros(4, 4));
        REQUIRE(arma::norm(fold_forwarder(T, F).entries - T.entries, "inf") == 0.0);
    }
}

TEST_CASE("fold_precoder mirrors the forwarder fold")
{
    const CorrelationMatrix I3{real_mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})};
    const arma::cx_mat F3 = real_mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    REQUIRE(arma::norm(fold_precoder(I3, F3).entries - I3.entries, "inf") == 0.0);

    CovarianceSpec ex;
    ex.kind = CovarianceSpec::Kind::exponential;
    ex.r = 0.5;
    const CorrelationMatrix E2 = build_covariance(ex, 2);
    const arma::cx_mat F2 = real_mat({{1, 0}, {0, 1}});
    REQUIRE(arma::norm(fold_precoder(E2, F2).entries - real_mat({{1, 0.5}, {0.5, 1}}), "inf") < 1e-15);
}

TEST_CASE("beamformer power constraint is enforced")
{
    const std::string p = write_temp("bf_bad.txt", "1.4142135623730951\n");
    BeamformerSpec spec;
    spec.kind = BeamformerSpec::Kind::explicit_file;
    spec.path = p;
    // Tr{F F^H} = 2 for a 1x1 entry sqrt(2), violating the n_s = 1 condition.
    REQUIRE_THROWS_WITH(load_beamformer(spec, 1, "precoder"),
                        Catch::Matchers::ContainsSubstring("trace condition"));
    std::remove(p.c_str());
}

TEST_CASE("star embedding pads with zeros in the chosen corner")
{
    const arma::cx_mat one = real_mat({{2}});
    REQUIRE(arma::norm(star_embed(one, 2) - real_mat({{2, 0}, {0, 0}}), "inf") == 0.0);

    const arma::cx_mat I3 = real_mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    REQUIRE(arma::norm(star_embed(I3, 3) - I3, "inf") == 0.0);

    const arma::cx_mat T = real_mat({{1, 0.5}, {0.5, 1}});
    REQUIRE(arma::norm(star_embed(T, 3) - real_mat({{1, 0.5, 0}, {0.5, 1, 0}, {0, 0, 0}}), "inf") == 0.0);
    REQUIRE(arma::norm(star_embed(T, 3, Corner::bottom_right) -
                           real_mat({{0, 0, 0}, {0, 1, 0.5}, {0, 0.5, 1}}),
                       "inf") == 0.0);

    REQUIRE_THROWS_AS(star_embed(I3, 2), ValidationError);
}

TEST_CASE("star embedding preserves the nonzero spectrum")
{
    CovarianceSpec ex;
    ex.kind = CovarianceSpec::Kind::exponential;
    ex.r = 0.6;
    const arma::cx_mat A = build_covariance(ex, 3).entries;
    const arma::cx_mat E = star_embed(A, 6);
    arma::vec ea, ee;
    REQUIRE(arma::eig_sym(ea, A));
    REQUIRE(arma::eig_sym(ee, E));
    // Embedded spectrum = original spectrum plus three zeros.
    arma::vec expected = arma::join_cols(arma::zeros(3), ea);
    REQUIRE(arma::norm(arma::sort(ee) - arma::sort(expected), "inf") < 1e-12);
}

TEST_CASE("identity embedding pads with unit modes")
{
    const arma::cx_mat T = real_mat({{1, 0.5}, {0.5, 1}});
    REQUIRE(arma::norm(identity_embed(T, 3) - real_mat({{1, 0.5, 0}, {0.5, 1, 0}, {0, 0, 1}}),
                       "inf") == 0.0);
    REQUIRE_THROWS_AS(identity_embed(T, 1), ValidationError);
}

TEST_CASE("complex matrix entries parse in all written forms")
{
    REQUIRE(parse_complex_entry("1.5", 1) == std::complex<double>(1.5, 0.0));
    REQUIRE(parse_complex_entry("2+3i", 1) == std::complex<double>(2.0, 3.0));
    REQUIRE(parse_complex_entry("2-3i", 1) == std::complex<double>(2.0, -3.0));
    REQUIRE(parse_complex_entry("-1.5e-3+2.5e2i", 1) == std::complex<double>(-1.5e-3, 2.5e2));
    REQUIRE_THROWS_AS(parse_complex_entry("abc", 3), ParseError);
    REQUIRE_THROWS_AS(parse_complex_entry("1+2", 3), ParseError);
    REQUIRE_THROWS_AS(parse_complex_entry("i", 3), ParseError);
    try
    {
        parse_complex_entry("xyz", 7);
        FAIL("expected ParseError");
    }
    catch (const ParseError &e)
    {
        REQUIRE(e.line == 7);
    }
}

TEST_CASE("matrix files round-trip through write and read")
{
    arma::cx_mat M(2, 3);
    M(0, 0) = {1.25, 0};
    M(0, 1) = {-2, 0.5};
    M(0, 2) = {0, -1};
    M(1, 0) = {3, 0};
    M(1, 1) = {4.75, -0.125};
    M(1, 2) = {5, 0};
    std::ostringstream os;
    write_complex_matrix(os, M);
    std::istringstream is(os.str());
    const arma::cx_mat back = read_complex_matrix_stream(is, "roundtrip");
    REQUIRE(arma::norm(back - M, "inf") == 0.0);
}

TEST_CASE("matrix reader skips comments and rejects ragged rows")
{
    std::istringstream ok("# header comment\n\n1 2 # trailing comment\n3 4\n");
    const arma::cx_mat M = read_complex_matrix_stream(ok, "fixture");
    REQUIRE(M.n_rows == 2);
    REQUIRE(M(1, 1) == std::complex<double>(4.0, 0.0));

    std::istringstream ragged("1 2\n3\n");
    REQUIRE_THROWS_AS(read_complex_matrix_stream(ragged, "fixture"), ParseError);

    std::istringstream empty("# only comments\n");
    REQUIRE_THROWS_AS(read_complex_matrix_stream(empty, "fixture"), ParseError);
}

TEST_CASE("effective covariances fold beamformers into the transmit sides")
{
    ChannelConfig cfg;
    cfg.n_s = 2;
    cfg.n_r = 3;
    cfg.n_d = 2;
    cfg.rho = 1.0;
    cfg.alpha = 1.0;
    cfg.cov_Ts.kind = CovarianceSpec::Kind::exponential;
    cfg.cov_Ts.r = 0.5;
    const Covariances cov = effective_covariances(cfg);
    REQUIRE(cov.Ts.n_rows == 2);
    REQUIRE(cov.Rr.n_rows == 3);
    REQUIRE(cov.Tr.n_rows == 3);
    REQUIRE(cov.Rd.n_rows == 2);
    REQUIRE(arma::norm(cov.Ts - real_mat({{1, 0.5}, {0.5, 1}}), "inf") < 1e-15);
}
