#pragma once

#include "superw/derivation.hpp"
#include "superw/report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace superw {

using SparseRow = std::vector<std::pair<int, Rational>>;  // sorted by column

/// Incremental exact row echelon over Q. Rows are cleared to integer vectors
/// and reduced fraction-free against the current pivot set (content-reduced
/// after every combination, leading coefficients kept positive); independent
/// remainders become new pivots. Pivot choice is the leading column, so
/// elimination is deterministic for a fixed insertion order.
class RowEchelon {
public:
    using IntRow = std::vector<std::pair<int, BigInt>>;

    /// Returns true when the row was independent (rank grew).
    bool insert(const SparseRow& row);
    bool insert_int(IntRow row);
    long long rank() const { return static_cast<long long>(pivots_.size()); }

private:
    std::map<int, IntRow> pivots_;
};

/// The linearization of the derivation rule over a window: one unknown per
/// (source symbol, target pair) coordinate, one equation per surviving defect
/// component. Every equation involves only window-resident degrees: pairs
/// whose bracket leaves the window are excluded, and defect components that
/// would reference an untracked coordinate are dropped so that truncation
/// never manufactures false constraints.
struct CocycleSystem {
    struct Unknown {
        BasisSymbol source;
        SymbolPair target;
    };

    Degree degree{Rational(0), Coset::Gamma};
    Parity parity = Parity::Even;
    std::string window_desc;

    std::vector<Unknown> unknowns;
    std::vector<SparseRow> equations;
    std::vector<SparseRow> inner_generators;  // inner derivations, same coordinates
    std::vector<int> interior;                // coordinate ids with interior source

    /// Plain-text dump for cross-checking with external linear algebra tools.
    std::string export_text() const;
};

CocycleSystem assemble_cocycle_system(const Algebra& algebra, const Degree& t, Parity parity,
                                      const DegreeWindow& window);

/// Desk-scale H1 evidence: assembles the cocycle system, solves it by exact
/// elimination and reports
///   interior_quotient = dim(cocycles|interior) - dim(inners|interior),
/// expected 0. Throws std::domain_error when the window interior is empty.
/// When out_system is non-null the assembled system is copied out for
/// export/cross-checking.
CheckReport solve_h1_window(const Algebra& algebra, const Degree& t, Parity parity,
                            const DegreeWindow& window, CocycleSystem* out_system = nullptr);

/// Smallest 1 <= m <= bound with [L_(eps m), x] != 0 (resp. the diagonal
/// action for tensor arguments). Fails only when no witness exists within the
/// bound, which for bound >= support+1 would falsify the implementation, not
/// the theory. Throws std::domain_error for x = 0.
CheckReport annihilator_scan(const Algebra& algebra, const AlgElement& x, const Rational& eps,
                             long long bound);
CheckReport annihilator_scan(const Algebra& algebra, const TensorElement& u, const Rational& eps,
                             long long bound);
CheckReport annihilator_scan(const Algebra& algebra, const TripleTensor& w, const Rational& eps,
                             long long bound);

}  // namespace superw
