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

#ifndef relaymi_covariance_H
#define relaymi_covariance_H

#include <armadillo>
#include <cmath>
#include <string>

#include "complexio.hpp"
#include "config.hpp"
#include "errors.hpp"
#include "linalg.hpp"

namespace relaymi
{

    // Hermitian positive definite correlation matrix. Raw correlation matrices
    // additionally satisfy Tr = dim; folded effective matrices are exempt.
    struct CorrelationMatrix
    {
        arma::cx_mat entries;
        unsigned dim() const { return static_cast<unsigned>(entries.n_rows); }
    };

    // Validates Hermitian (elementwise 1e-12), positive definite (Cholesky pivots),
    // and optionally Tr = dim (relative 1e-12). Throws naming the failed invariant.
    inline void validate_correlation(const arma::cx_mat &M, unsigned dim, bool require_trace,
                                     const std::string &what)
    {
        if (M.n_rows != dim || M.n_cols != dim)
            throw ValidationError(what + ": dimension is " + std::to_string(M.n_rows) + "x" +
                                  std::to_string(M.n_cols) + ", expected " + std::to_string(dim) +
                                  "x" + std::to_string(dim));
        const double herm_dev = arma::abs(M - M.t()).max();
        if (herm_dev > 1e-12)
            throw ValidationError(what + ": not Hermitian (max deviation " + std::to_string(herm_dev) + ")");
        arma::cx_mat R;
        if (!arma::chol(R, M) || arma::real(R.diag()).min() <= 0.0)
            throw ValidationError(what + ": not positive definite");
        if (require_trace)
        {
            const double tr = arma::trace(M).real();
            if (std::abs(tr - double(dim)) > 1e-12 * double(dim))
                throw ValidationError(what + ": trace is " + std::to_string(tr) + ", expected " +
                                      std::to_string(dim));
        }
    }

    // Builds a correlation matrix from its specification. The exponential kind
    // produces entry(i,j) = r^|i-j|, a real Toeplitz matrix with trace dim.
    inline CorrelationMatrix build_covariance(const CovarianceSpec &spec, unsigned dim,
                                              const std::string &what = "covariance")
    {
        if (dim < 1)
            throw ValidationError(what + ": dimension must be >= 1");
        arma::cx_mat M;
        switch (spec.kind)
        {
        case CovarianceSpec::Kind::identity:
            M = arma::cx_mat(arma::eye(dim, dim), arma::zeros(dim, dim));
            break;
        case CovarianceSpec::Kind::exponential:
        {
            if (!(spec.r >= 0.0 && spec.r < 1.0))
                throw ValidationError(what + ": exponential decay must be in [0,1)");
            arma::mat E(dim, dim);
            for (unsigned i = 0; i < dim; ++i)
                for (unsigned j = 0; j < dim; ++j)
                    E(i, j) = std::pow(spec.r, std::abs(int(i) - int(j)));
            M = arma::cx_mat(E, arma::zeros(dim, dim));
            break;
        }
        case CovarianceSpec::Kind::explicit_file:
            M = read_complex_matrix(spec.path);
            break;
        }
        validate_correlation(M, dim, true, what);
        return {std::move(M)};
    }

    // Loads a beamformer and checks its power constraint Tr{F F^H} = dim (relative 1e-9).
    inline arma::cx_mat load_beamformer(const BeamformerSpec &spec, unsigned dim, const std::string &what)
    {
        arma::cx_mat F;
        if (spec.kind == BeamformerSpec::Kind::identity)
            F = arma::cx_mat(arma::eye(dim, dim), arma::zeros(dim, dim));
        else
            F = read_complex_matrix(spec.path);
        if (F.n_rows != dim || F.n_cols != dim)
            throw ValidationError(what + ": dimension is " + std::to_string(F.n_rows) + "x" +
                                  std::to_string(F.n_cols) + ", expected " + std::to_string(dim) +
                                  "x" + std::to_string(dim));
        const double tr = arma::trace(F * F.t()).real();
        if (std::abs(tr - double(dim)) > 1e-9 * double(dim))
            throw ValidationError(what + ": trace condition Tr{F F^H} = " + std::to_string(dim) +
                                  " violated (got " + std::to_string(tr) + ")");
        return F;
    }

    // Folds the relay forwarding matrix into the relay transmit correlation.
    inline CorrelationMatrix fold_forwarder(const CorrelationMatrix &T_r, const arma::cx_mat &F)
    {
        arma::cx_mat M = F * T_r.entries * F.t();
        M = 0.5 * (M + M.t()); // symmetrize round-off
        arma::cx_mat R;
        if (!arma::chol(R, M))
            throw ValidationError("effective covariance not positive definite");
        return {std::move(M)};
    }

    // Folds the source precoder into the source transmit correlation.
    inline CorrelationMatrix fold_precoder(const CorrelationMatrix &T_s, const arma::cx_mat &F)
    {
        arma::cx_mat M = F * T_s.entries * F.t();
        M = 0.5 * (M + M.t());
        arma::cx_mat R;
        if (!arma::chol(R, M))
            throw ValidationError("effective covariance not positive definite");
        return {std::move(M)};
    }

    enum class Corner
    {
        top_left,
        bottom_right
    };

    // Star embedding: places A in the chosen corner of a target x target zero
    // matrix. The embedding keeps A's spectrum and pads with zero eigenvalues.
    inline arma::cx_mat star_embed(const arma::cx_mat &A, unsigned target, Corner corner = Corner::top_left)
    {
        const unsigned a = static_cast<unsigned>(A.n_rows);
        if (target < a)
            throw ValidationError("star_embed: target " + std::to_string(target) +
                                  " smaller than matrix dimension " + std::to_string(a));
        if (target == a)
            return A;
        arma::cx_mat out(target, target, arma::fill::zeros);
        if (corner == Corner::top_left)
            out.submat(0, 0, a - 1, a - 1) = A;
        else
            out.submat(target - a, target - a, target - 1, target - 1) = A;
        return out;
    }

    // Identity-padded embedding: as star_embed but the complement block is the
    // identity, so the embedded operator acts trivially outside A's span.
    inline arma::cx_mat identity_embed(const arma::cx_mat &A, unsigned target, Corner corner = Corner::top_left)
    {
        const unsigned a = static_cast<unsigned>(A.n_rows);
        if (target < a)
            throw ValidationError("identity_embed: target " + std::to_string(target) +
                                  " smaller than matrix dimension " + std::to_string(a));
        if (target == a)
            return A;
        arma::cx_mat out(arma::eye(target, target) * arma::cx_double(1.0, 0.0));
        if (corner == Corner::top_left)
            out.submat(0, 0, a - 1, a - 1) = A;
        else
            out.submat(target - a, target - a, target - 1, target - 1) = A;
        return out;
    }

    // The four effective covariances of a scenario, beamformers folded in.
    struct Covariances
    {
        arma::cx_mat Ts; // effective source transmit (precoder folded)
        arma::cx_mat Rr; // relay receive
        arma::cx_mat Tr; // effective relay transmit (forwarder folded)
        arma::cx_mat Rd; // destination receive
    };

    inline Covariances effective_covariances(const ChannelConfig &cfg)
    {
        cfg.validate();
        CorrelationMatrix Ts = build_covariance(cfg.cov_Ts, cfg.n_s, "cov_Ts");
        CorrelationMatrix Rr = build_covariance(cfg.cov_Rr, cfg.n_r, "cov_Rr");
        CorrelationMatrix Tr = build_covariance(cfg.cov_Tr, cfg.n_r, "cov_Tr");
        CorrelationMatrix Rd = build_covariance(cfg.cov_Rd, cfg.n_d, "cov_Rd");
        const arma::cx_mat Fs = load_beamformer(cfg.precoder, cfg.n_s, "precoder");
        const arma::cx_mat Fr = load_beamformer(cfg.forwarder, cfg.n_r, "forwarder");
        Covariances out;
        out.Ts = fold_precoder(Ts, Fs).entries;
        out.Rr = std::move(Rr.entries);
        out.Tr = fold_forwarder(Tr, Fr).entries;
        out.Rd = std::move(Rd.entries);
        return out;
    }

} // namespace relaymi

#endif
