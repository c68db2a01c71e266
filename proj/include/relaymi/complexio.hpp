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

#ifndef relaymi_complexio_H
#define relaymi_complexio_H

#include <armadillo>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace relaymi
{

    // Parses one matrix entry: `a`, `a+bi`, or `a-bi` with decimal reals.
    inline std::complex<double> parse_complex_entry(const std::string &tok, int line_no)
    {
        const bool has_i = !tok.empty() && tok.back() == 'i';
        const std::string body = has_i ? tok.substr(0, tok.size() - 1) : tok;
        if (body.empty())
            throw ParseError(line_no, "malformed entry '" + tok + "'");

        // Split at the last sign that is not a leading sign or an exponent sign.
        std::size_t split = std::string::npos;
        for (std::size_t p = body.size(); p-- > 1;)
        {
            const char c = body[p];
            if ((c == '+' || c == '-') && body[p - 1] != 'e' && body[p - 1] != 'E')
            {
                split = p;
                break;
            }
        }

        auto to_double = [&](const std::string &s) -> double
        {
            if (s.empty() || s == "+" || s == "-")
                throw ParseError(line_no, "malformed entry '" + tok + "'");
            char *end = nullptr;
            const double v = std::strtod(s.c_str(), &end);
            if (end != s.c_str() + s.size())
                throw ParseError(line_no, "malformed entry '" + tok + "'");
            return v;
        };

        if (!has_i)
        {
            if (split != std::string::npos)
                throw ParseError(line_no, "malformed entry '" + tok + "' (imaginary part without trailing i)");
            return {to_double(body), 0.0};
        }
        if (split == std::string::npos)
            throw ParseError(line_no, "malformed entry '" + tok + "' (missing real part)");
        return {to_double(body.substr(0, split)), to_double(body.substr(split))};
    }

    // Reads a complex matrix: one row per line, whitespace-separated entries,
    // blank lines and lines starting with '#' ignored. All rows must have equal length.
    inline arma::cx_mat read_complex_matrix_stream(std::istream &in, const std::string &origin)
    {
        std::vector<std::vector<std::complex<double>>> rows;
        std::string line;
        int line_no = 0;
        while (std::getline(in, line))
        {
            ++line_no;
            std::istringstream ls(line);
            std::string tok;
            std::vector<std::complex<double>> row;
            while (ls >> tok)
            {
                if (tok[0] == '#')
                    break;
                row.push_back(parse_complex_entry(tok, line_no));
            }
            if (row.empty())
                continue;
            if (!rows.empty() && row.size() != rows.front().size())
                throw ParseError(line_no, origin + ": row has " + std::to_string(row.size()) +
                                              " entries, expected " + std::to_string(rows.front().size()));
            rows.push_back(std::move(row));
        }
        if (rows.empty())
            throw ParseError(line_no ? line_no : 1, origin + ": no matrix rows found");
        arma::cx_mat M(rows.size(), rows.front().size());
        for (arma::uword i = 0; i < M.n_rows; ++i)
            for (arma::uword j = 0; j < M.n_cols; ++j)
                M(i, j) = rows[i][j];
        return M;
    }

    inline arma::cx_mat read_complex_matrix(const std::string &path)
    {
        std::ifstream f(path);
        if (!f)
            throw ValidationError("cannot open matrix file '" + path + "'");
        return read_complex_matrix_stream(f, path);
    }

    // Writes a matrix in the same format; pure-real entries are written as `a`.
    inline void write_complex_matrix(std::ostream &out, const arma::cx_mat &M)
    {
        char buf[96];
        for (arma::uword i = 0; i < M.n_rows; ++i)
        {
            for (arma::uword j = 0; j < M.n_cols; ++j)
            {
                const std::complex<double> z = M(i, j);
                if (z.imag() == 0.0)
                    std::snprintf(buf, sizeof buf, "%.17g", z.real());
                else
                    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
                out << (j ? " " : "") << buf;
            }
            out << "\n";
        }
    }

} // namespace relaymi

#endif
