#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace twyang {

/// A cell (row, column), both 1-based.
using Box = std::pair<int, int>;

/// Skew Young diagram λ/μ. Canonical form: μ padded to the length of λ, trailing rows with
/// λ_i = 0 removed.
class SkewDiagram {
   public:
    SkewDiagram() = default;
    /// Throws MalformedShape unless λ, μ are weakly decreasing, non-negative and λ_i ≥ μ_i.
    SkewDiagram(std::vector<int> lambda, std::vector<int> mu = {});

    /// "l1,l2,.../m1,m2,..." or "l1,l2,..."; "0" is the empty diagram.
    static SkewDiagram parse(const std::string& text);
    std::string str() const;

    const std::vector<int>& lambda() const noexcept { return lambda_; }
    /// μ with trailing zeros removed.
    std::vector<int> mu() const;
    int mu_at(std::size_t row0) const { return row0 < mu_.size() ? mu_[row0] : 0; }
    std::size_t rows() const noexcept { return lambda_.size(); }

    std::size_t size() const;
    bool empty() const { return size() == 0; }
    /// Boxes sorted by row, then column.
    std::vector<Box> boxes() const;
    bool contains(int row, int col) const;
    /// Number of boxes in the tallest column.
    int max_column_height() const;

    friend bool operator==(const SkewDiagram& a, const SkewDiagram& b) {
        return a.lambda_ == b.lambda_ && a.mu_ == b.mu_;
    }

   private:
    std::vector<int> lambda_, mu_;
};

/// Boxes are equal as sets (translation is not factored out).
bool same_boxes(const SkewDiagram& a, const SkewDiagram& b);

/// Column-standard filling: columns left to right, each column top to bottom.
struct ColumnTableau {
    std::vector<Box> boxes;
    std::vector<int> contents;  // c_p = j_p - i_p
    /// Column index of each box (1-based).
    std::vector<int> columns() const;
};

ColumnTableau column_tableau(const SkewDiagram& omega);

struct SharpResult {
    SkewDiagram diagram;
    int c = 0;
};

/// 180° rotation inside the bounding box: (i, j) -> (r0 + r1 - i, c0 + c1 - j) where [r0, r1] × [c0, c1]
/// is the smallest box containing ω. Verifies that c^ω_p + c^{ω♯}_{n+1-p} is constant (SharpInconsistent).
SharpResult sharp(const SkewDiagram& omega);

/// Semistandard fillings with entries 1..N, by backtracking.
std::uint64_t ssyt_count(const SkewDiagram& omega, int N);

/// Throws ShapeExceedsDimension if some column has more than N boxes.
void check_fits(const SkewDiagram& omega, int N);

/// Every skew diagram (up to the canonical form, μ_1 < λ_1 when nonempty) with exactly
/// `boxes` boxes inside a `max_rows` × `max_cols` rectangle.
std::vector<SkewDiagram> enumerate_skew(int boxes, int max_rows, int max_cols);

}  // namespace twyang
