// Copyright 2026 The permlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "permlab/int_matrix.hpp"

#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "permlab/errors.hpp"

namespace permlab {

IntMatrix::IntMatrix(std::size_t n) : n_(n), data_(n * n) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) : n_(rows.size()) {
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) {
            throw InvalidInput("IntMatrix: rows must have length " + std::to_string(n_));
        }
        for (long long v : row) {
            data_.emplace_back(v);
        }
    }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
    IntMatrix m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.size()) {
            throw InvalidInput("matrix is not square: row " + std::to_string(r) + " has " +
                               std::to_string(rows[r].size()) + " entries, expected " +
                               std::to_string(rows.size()));
        }
        for (std::size_t c = 0; c < rows.size(); ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

const BigInt& IntMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= n_ || c >= n_) {
        throw IndexOutOfRange("matrix index (" + std::to_string(r) + ", " + std::to_string(c) +
                              ") out of range for dimension " + std::to_string(n_));
    }
    return (*this)(r, c);
}

bool IntMatrix::is_sign_matrix() const {
    for (const auto& v : data_) {
        if (v < -1 || v > 1) {
            return false;
        }
    }
    return true;
}

BigInt IntMatrix::max_abs() const {
    BigInt best = 0;
    for (const auto& v : data_) {
        BigInt a = abs(v);
        if (a > best) {
            best = a;
        }
    }
    return best;
}

std::string IntMatrix::str() const {
    std::ostringstream out;
    out << *this;
    return out.str();
}

std::ostream& operator<<(std::ostream& out, const IntMatrix& m) {
    out << m.dim() << '\n';
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            if (c) {
                out << ' ';
            }
            out << m(r, c);
        }
        out << '\n';
    }
    return out;
}

IntMatrix minor(const IntMatrix& m, std::size_t i, std::size_t j) {
    const std::size_t n = m.dim();
    if (n == 0 || i >= n || j >= n) {
        throw IndexOutOfRange("minor: index (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") out of range for dimension " + std::to_string(n));
    }
    IntMatrix out(n - 1);
    for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) {
            continue;
        }
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
            if (c == j) {
                continue;
            }
            out(rr, cc++) = m(r, c);
        }
        ++rr;
    }
    return out;
}

IntMatrix rotate_column_to_front(const IntMatrix& m, std::size_t j) {
    const std::size_t n = m.dim();
    if (j >= n) {
        throw IndexOutOfRange("rotate_column_to_front: column " + std::to_string(j) +
                              " out of range for dimension " + std::to_string(n));
    }
    IntMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        out(r, 0) = m(r, j);
        for (std::size_t c = 0, dst = 1; c < n; ++c) {
            if (c != j) {
                out(r, dst++) = m(r, c);
            }
        }
    }
    return out;
}

namespace {

BigInt parse_integer(const std::string& token) {
    std::size_t start = (!token.empty() && (token[0] == '-' || token[0] == '+')) ? 1 : 0;
    if (start == token.size()) {
        throw InvalidInput("expected an integer, got '" + token + "'");
    }
    for (std::size_t k = start; k < token.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(token[k]))) {
            throw InvalidInput("expected an integer, got '" + token + "'");
        }
    }
    return BigInt(token[0] == '+' ? token.substr(1) : token);
}

BigInt json_integer(const nlohmann::json& v) {
    if (v.is_number_integer()) {
        return v.is_number_unsigned() ? BigInt(v.get<std::uint64_t>()) : BigInt(v.get<std::int64_t>());
    }
    if (v.is_string()) {
        return parse_integer(v.get<std::string>());
    }
    throw InvalidInput("matrix entry is not an integer: " + v.dump());
}

IntMatrix parse_json_matrix(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON matrix: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
        throw InvalidInput("JSON matrix must be an object with an \"entries\" array");
    }
    std::vector<std::vector<BigInt>> rows;
    for (const auto& row : doc["entries"]) {
        if (!row.is_array()) {
            throw InvalidInput("JSON matrix rows must be arrays");
        }
        auto& dst = rows.emplace_back();
        for (const auto& v : row) {
            dst.push_back(json_integer(v));
        }
    }
    return IntMatrix::from_rows(rows);
}

}  // namespace

IntMatrix parse_matrix(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        return parse_json_matrix(text);
    }
    std::istringstream in(text);
    std::string token;
    if (!(in >> token)) {
        throw InvalidInput("empty matrix input");
    }
    BigInt n_big = parse_integer(token);
    if (n_big < 0 || n_big > 4096) {
        throw InvalidInput("matrix dimension out of range: " + token);
    }
    const auto n = static_cast<std::size_t>(n_big);
    IntMatrix m(n);
    for (std::size_t k = 0; k < n * n; ++k) {
        if (!(in >> token)) {
            throw InvalidInput("matrix text ends after " + std::to_string(k) + " of " +
                               std::to_string(n * n) + " entries");
        }
        m(k / n, k % n) = parse_integer(token);
    }
    if (in >> token) {
        throw InvalidInput("unexpected trailing token in matrix text: '" + token + "'");
    }
    return m;
}

IntMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open matrix file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str());
}

Rational make_rational(const BigInt& p, const BigInt& q) {
    if (q == 0) {
        throw InvalidInput("rational with zero denominator");
    }
    return q < 0 ? Rational(BigInt(-p), BigInt(-q)) : Rational(p, q);
}

}  // namespace permlab
