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

#ifndef relaymi_linalg_H
#define relaymi_linalg_H

#include <armadillo>
#include <cmath>
#include <complex>
#include <string>

#include "errors.hpp"

namespace relaymi
{

    // ln det of a Hermitian positive definite matrix via Cholesky log-pivots.
    // Never forms the raw determinant, so it cannot overflow at large dimension.
    inline double lndet_hermitian_pd(const arma::cx_mat &M, const std::string &what)
    {
        arma::cx_mat R;
        if (!arma::chol(R, M))
            throw NumericError(what + ": matrix not positive definite");
        double acc = 0.0;
        for (arma::uword i = 0; i < R.n_rows; ++i)
            acc += std::log(R(i, i).real());
        return 2.0 * acc;
    }

    // ln |det| of a general square matrix via pivoted LU; absolute values of the
    // pivots are taken before the logarithm.
    inline double logabsdet(const arma::cx_mat &M, const std::string &what)
    {
        arma::cx_mat L, U, P;
        if (!arma::lu(L, U, P, M))
            throw NumericError(what + ": LU factorization failed");
        double acc = 0.0;
        for (arma::uword i = 0; i < U.n_rows; ++i)
        {
            const double p = std::abs(U(i, i));
            if (p == 0.0)
                throw NumericError(what + ": degenerate (zero pivot)");
            acc += std::log(p);
        }
        return acc;
    }

    // Real-matrix counterpart of logabsdet.
    inline double logabsdet_real(const arma::mat &M, const std::string &what)
    {
        arma::mat L, U, P;
        if (!arma::lu(L, U, P, M))
            throw NumericError(what + ": LU factorization failed");
        double acc = 0.0;
        for (arma::uword i = 0; i < U.n_rows; ++i)
        {
            const double p = std::abs(U(i, i));
            if (p == 0.0)
                throw NumericError(what + ": degenerate (zero pivot)");
            acc += std::log(p);
        }
        return acc;
    }

    // Hermitian square root via eigendecomposition; requires strictly positive spectrum.
    inline arma::cx_mat sqrtm_hermitian_pd(const arma::cx_mat &M, const std::string &what)
    {
        arma::vec eval;
        arma::cx_mat evec;
        if (!arma::eig_sym(eval, evec, M))
            throw NumericError(what + ": eigendecomposition failed");
        if (eval.min() <= 0.0)
            throw NumericError(what + ": matrix not positive definite");
        return evec * arma::diagmat(arma::sqrt(eval)) * evec.t();
    }

    // Real part of a trace whose imaginary part is round-off by construction.
    inline double real_trace(const arma::cx_mat &M)
    {
        return arma::trace(M).real();
    }

} // namespace relaymi

#endif
