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

#ifndef relaymi_config_H
#define relaymi_config_H

#include <string>

#include "errors.hpp"

namespace relaymi
{

    // Numerator form of the s2 fixed-point equation. as_printed evaluates the
    // literal published form; scalar_consistent uses the form whose identity
    // equal-dimension reduction matches the scalar oracle and whose rho=0 limit
    // nulls the mean and variance exactly.
    enum class S2Variant
    {
        as_printed,
        scalar_consistent
    };

    // How a correlation matrix is built.
    struct CovarianceSpec
    {
        enum class Kind
        {
            identity,
            exponential,
            explicit_file
        };
        Kind kind = Kind::identity;
        double r = 0.0;       // exponential decay, in [0,1)
        std::string path;     // explicit matrix file
    };

    // How a beamforming matrix is built.
    struct BeamformerSpec
    {
        enum class Kind
        {
            identity,
            explicit_file
        };
        Kind kind = Kind::identity;
        std::string path;
    };

    // Single source of truth for a scenario.
    struct ChannelConfig
    {
        unsigned n_s = 0; // source antennas
        unsigned n_r = 0; // relay antennas
        unsigned n_d = 0; // destination antennas
        double rho = 0.0; // per-symbol transmit SNR
        double alpha = 1.0; // relay forwarding power gain

        CovarianceSpec cov_Ts, cov_Rr, cov_Tr, cov_Rd;
        BeamformerSpec precoder, forwarder;
        S2Variant s2_variant = S2Variant::scalar_consistent;

        unsigned batch_size = 1024; // Monte Carlo partition size, fixed for determinism

        void validate() const
        {
            if (n_s < 1)
                throw ValidationError("n_s: dimension must be >= 1");
            if (n_r < 1)
                throw ValidationError("n_r: dimension must be >= 1");
            if (n_d < 1)
                throw ValidationError("n_d: dimension must be >= 1");
            if (!(rho >= 0.0))
                throw ValidationError("rho: must be >= 0");
            if (!(alpha > 0.0))
                throw ValidationError("alpha: must be > 0");
            if (batch_size < 1)
                throw ValidationError("batch_size: must be >= 1");
            auto check_r = [](const CovarianceSpec &s, const char *name)
            {
                if (s.kind == CovarianceSpec::Kind::exponential && !(s.r >= 0.0 && s.r < 1.0))
                    throw ValidationError(std::string(name) + ": exponential decay must be in [0,1)");
            };
            check_r(cov_Ts, "cov_Ts");
            check_r(cov_Rr, "cov_Rr");
            check_r(cov_Tr, "cov_Tr");
            check_r(cov_Rd, "cov_Rd");
        }
    };

} // namespace relaymi

#endif
