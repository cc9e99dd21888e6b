#pragma once

// Test-only oracle for the windowed H1 quotient. Reads the plain-text system
// dump, runs its own Gaussian elimination (two-term integer updates, rows in
// file order, no pivot-ordering tricks), extracts an explicit kernel basis by
// back-substitution and recomputes
//     quotient = rank(kernel basis | interior) - rank(inners | interior).
// Shares no code with the solver beyond the Rational scalar type.

#include "superw/rational.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace h1_oracle {

using superw::BigInt;
using superw::Rational;

using Row = std::map<int, Rational>;

struct System {
    long long unknowns = 0;
    std::vector<int> interior;
    std::vector<Row> equations;
    std::vector<Row> inners;
};

inline Row parse_row(const std::string& line) {
    Row row;
    std::istringstream in(line);
    std::string cell;
    while (in >> cell) {
        auto colon = cell.find(':');
        int col = std::stoi(cell.substr(0, colon));
        row[col] = Rational::parse(cell.substr(colon + 1));
    }
    return row;
}

inline System parse_system(const std::string& dump) {
    System sys;
    std::istringstream in(dump);
    std::string line;
    long long n_eq = -1, n_inner = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "unknowns") {
            ls >> sys.unknowns;
        } else if (word == "interior") {
            int idx;
            while (ls >> idx) sys.interior.push_back(idx);
        } else if (word == "equations") {
            ls >> n_eq;
            for (long long i = 0; i < n_eq && std::getline(in, line); ++i)
                sys.equations.push_back(parse_row(line));
        } else if (word == "inners") {
            ls >> n_inner;
            for (long long i = 0; i < n_inner && std::getline(in, line); ++i)
                sys.inners.push_back(parse_row(line));
        }
    }
    if (n_eq != static_cast<long long>(sys.equations.size()) ||
        n_inner != static_cast<long long>(sys.inners.size()))
        throw std::runtime_error("h1 oracle: truncated system dump");
    return sys;
}

// Plain row-echelon structure: pivot column -> integer row (column-sorted
// vectors), built by eliminating each row against the pivots in file order.
struct Echelon {
    using IRow = std::vector<std::pair<int, BigInt>>;
    std::map<int, IRow> pivots;

    static void divide_content(IRow& r) {
        BigInt g = 0;
        for (const auto& [c, v] : r) {
            g = boost::integer::gcd(g, v);
            if (g == 1) return;
        }
        if (g > 1)
            for (auto& [c, v] : r) v /= g;
    }

    bool add(const Row& rational_row) {
        IRow r;
        BigInt denom = 1;
        for (const auto& [c, q] : rational_row)
            denom = boost::integer::lcm(denom, BigInt(q.denominator()));
        for (const auto& [c, q] : rational_row) {
            BigInt v = q.numerator() * (denom / q.denominator());
            if (v != 0) r.emplace_back(c, std::move(v));
        }
        while (!r.empty()) {
            divide_content(r);
            int lead = r.front().first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                pivots.emplace(lead, std::move(r));
                return true;
            }
            const IRow& p = it->second;
            const BigInt a = p.front().second;
            const BigInt b = r.front().second;
            IRow next;
            next.reserve(r.size() + p.size());
            size_t i = 0, j = 0;
            while (i < r.size() || j < p.size()) {
                if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
                    next.emplace_back(r[i].first, a * r[i].second);
                    ++i;
                } else if (i == r.size() || p[j].first < r[i].first) {
                    next.emplace_back(p[j].first, -b * p[j].second);
                    ++j;
                } else {
                    BigInt v = a * r[i].second - b * p[j].second;
                    if (v != 0) next.emplace_back(r[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            r = std::move(next);
        }
        return false;
    }

    long long rank() const { return static_cast<long long>(pivots.size()); }
};

// kernel basis by back-substitution: one vector per free column
inline std::vector<Row> kernel_basis(const Echelon& ech, long long n) {
    std::vector<Row> basis;
    for (int f = 0; f < n; ++f) {
        if (ech.pivots.count(f)) continue;
        Row vec;
        vec[f] = Rational(1);
        // pivots in descending column order so every dependency is resolved
        for (auto it = ech.pivots.rbegin(); it != ech.pivots.rend(); ++it) {
            const auto& [pcol, prow] = *it;
            if (pcol > f) continue;
            Rational sum;
            for (const auto& [c, v] : prow) {
                if (c == pcol) continue;
                auto jt = vec.find(c);
                if (jt != vec.end()) sum += Rational(v) * jt->second;
            }
            if (!sum.is_zero()) vec[pcol] = -sum / Rational(prow.front().second);
        }
        basis.push_back(std::move(vec));
    }
    return basis;
}

inline Rational dot(const Row& a, const Row& b) {
    Rational sum;
    const Row& small = a.size() <= b.size() ? a : b;
    const Row& large = a.size() <= b.size() ? b : a;
    for (const auto& [c, v] : small) {
        auto it = large.find(c);
        if (it != large.end()) sum += v * it->second;
    }
    return sum;
}

struct Result {
    long long kernel_dim = 0;
    long long kernel_dim_interior = 0;
    long long inner_dim_interior = 0;
    long long quotient = 0;
    bool kernel_verified = false;  // every basis vector annihilates every equation
};

inline Result analyze(const System& sys) {
    Echelon ech;
    for (const auto& row : sys.equations) ech.add(row);

    std::vector<Row> kernel = kernel_basis(ech, sys.unknowns);
    Result res;
    res.kernel_dim = static_cast<long long>(kernel.size());
    if (res.kernel_dim != sys.unknowns - ech.rank())
        throw std::runtime_error("h1 oracle: kernel dimension mismatch");

    res.kernel_verified = true;
    for (const auto& vec : kernel)
        for (const auto& eq : sys.equations)
            if (!dot(eq, vec).is_zero()) res.kernel_verified = false;

    std::map<int, int> interior_pos;
    for (size_t i = 0; i < sys.interior.size(); ++i)
        interior_pos[sys.interior[i]] = static_cast<int>(i);
    auto project = [&](const Row& row) {
        Row out;
        for (const auto& [c, v] : row) {
            auto it = interior_pos.find(c);
            if (it != interior_pos.end()) out[it->second] = v;
        }
        return out;
    };

    Echelon proj_kernel;
    for (const auto& vec : kernel) proj_kernel.add(project(vec));
    res.kernel_dim_interior = proj_kernel.rank();

    Echelon proj_inner;
    for (const auto& row : sys.inners) proj_inner.add(project(row));
    res.inner_dim_interior = proj_inner.rank();

    res.quotient = res.kernel_dim_interior - res.inner_dim_interior;
    return res;
}

}  // namespace h1_oracle
