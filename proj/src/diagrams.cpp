#include "twyang/diagrams.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "twyang/error.hpp"

namespace twyang {

namespace {

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw Error(ErrorKind::MalformedShape, "bad part '" + item + "' in '" + text + "'");
        out.push_back(std::stoi(item));
    }
    if (!text.empty() && text.back() == ',') throw Error(ErrorKind::MalformedShape, "trailing comma in '" + text + "'");
    return out;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

SkewDiagram::SkewDiagram(std::vector<int> lambda, std::vector<int> mu) : lambda_(std::move(lambda)), mu_(std::move(mu)) {
    auto decreasing = [](const std::vector<int>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 0) return false;
            if (i && v[i] > v[i - 1]) return false;
        }
        return true;
    };
    if (!decreasing(lambda_)) throw Error(ErrorKind::MalformedShape, "λ is not weakly decreasing: " + join(lambda_));
    if (!decreasing(mu_)) throw Error(ErrorKind::MalformedShape, "μ is not weakly decreasing: " + join(mu_));
    if (mu_.size() > lambda_.size()) {
        for (std::size_t i = lambda_.size(); i < mu_.size(); ++i)
            if (mu_[i] != 0) throw Error(ErrorKind::MalformedShape, "μ is longer than λ");
    }
    mu_.resize(lambda_.size(), 0);
    for (std::size_t i = 0; i < lambda_.size(); ++i)
        if (lambda_[i] < mu_[i]) throw Error(ErrorKind::MalformedShape, "λ_i < μ_i in row " + std::to_string(i + 1));
    while (!lambda_.empty() && lambda_.back() == 0) {
        lambda_.pop_back();
        mu_.pop_back();
    }
}

SkewDiagram SkewDiagram::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos && text.find('/', slash + 1) != std::string::npos)
        throw Error(ErrorKind::MalformedShape, "more than one '/' in '" + text + "'");
    std::string l = text.substr(0, slash);
    std::string m = slash == std::string::npos ? "" : text.substr(slash + 1);
    if (l.empty()) throw Error(ErrorKind::MalformedShape, "empty λ in '" + text + "'");
    return SkewDiagram(parse_parts(l), parse_parts(m));
}

std::vector<int> SkewDiagram::mu() const {
    std::vector<int> m = mu_;
    while (!m.empty() && m.back() == 0) m.pop_back();
    return m;
}

std::string SkewDiagram::str() const {
    if (lambda_.empty()) return "0";
    auto m = mu();
    return m.empty() ? join(lambda_) : join(lambda_) + "/" + join(m);
}

std::size_t SkewDiagram::size() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < lambda_.size(); ++i) n += static_cast<std::size_t>(lambda_[i] - mu_[i]);
    return n;
}

std::vector<Box> SkewDiagram::boxes() const {
    std::vector<Box> out;
    for (std::size_t i = 0; i < lambda_.size(); ++i)
        for (int j = mu_[i] + 1; j <= lambda_[i]; ++j) out.emplace_back(static_cast<int>(i) + 1, j);
    return out;
}

bool SkewDiagram::contains(int row, int col) const {
    if (row < 1 || static_cast<std::size_t>(row) > lambda_.size()) return false;
    return col > mu_[row - 1] && col <= lambda_[row - 1];
}

int SkewDiagram::max_column_height() const {
    int best = 0;
    int width = lambda_.empty() ? 0 : lambda_[0];
    for (int j = 1; j <= width; ++j) {
        int h = 0;
        for (std::size_t i = 0; i < lambda_.size(); ++i) h += contains(static_cast<int>(i) + 1, j);
        best = std::max(best, h);
    }
    return best;
}

bool same_boxes(const SkewDiagram& a, const SkewDiagram& b) { return a.boxes() == b.boxes(); }

std::vector<int> ColumnTableau::columns() const {
    std::vector<int> out;
    out.reserve(boxes.size());
    for (const auto& b : boxes) out.push_back(b.second);
    return out;
}

ColumnTableau column_tableau(const SkewDiagram& omega) {
    ColumnTableau t;
    t.boxes = omega.boxes();
    std::stable_sort(t.boxes.begin(), t.boxes.end(), [](const Box& a, const Box& b) {
        return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    for (const auto& b : t.boxes) t.contents.push_back(b.second - b.first);
    return t;
}

SharpResult sharp(const SkewDiagram& omega) {
    if (omega.empty()) return {omega, 0};
    const auto& lam = omega.lambda();
    int r0 = 0, r1 = 0, c0 = 0, c1 = lam[0];
    for (std::size_t i = 0; i < lam.size(); ++i) {
        if (lam[i] == omega.mu_at(i)) continue;
        int row = static_cast<int>(i) + 1;
        if (r0 == 0) r0 = row;
        r1 = row;
        int first = omega.mu_at(i) + 1;
        c0 = c0 == 0 ? first : std::min(c0, first);
    }
    c1 = lam[static_cast<std::size_t>(r0 - 1)];
    std::vector<int> ls(static_cast<std::size_t>(r1), 0), ms(static_cast<std::size_t>(r1), 0);
    for (int r = r0; r <= r1; ++r) {
        std::size_t src = static_cast<std::size_t>(r0 + r1 - r - 1);
        ls[r - 1] = c0 + c1 - omega.mu_at(src) - 1;
        ms[r - 1] = c0 + c1 - lam[src] - 1;
    }
    for (int r = 1; r < r0; ++r) ls[r - 1] = ms[r - 1] = ls[r0 - 1];
    SharpResult res{SkewDiagram(ls, ms), (c0 + c1) - (r0 + r1)};

    auto a = column_tableau(omega).contents;
    auto b = column_tableau(res.diagram).contents;
    if (a.size() != b.size()) throw Error(ErrorKind::SharpInconsistent, "rotation changed the box count");
    for (std::size_t p = 0; p < a.size(); ++p)
        if (a[p] + b[a.size() - 1 - p] != res.c)
            throw Error(ErrorKind::SharpInconsistent, "c^ω_p + c^ω♯_σ(p) is not constant for " + omega.str());
    return res;
}

std::uint64_t ssyt_count(const SkewDiagram& omega, int N) {
    auto boxes = column_tableau(omega).boxes;
    std::vector<std::vector<int>> fill(omega.rows() + 1);
    for (std::size_t i = 0; i < omega.rows(); ++i) fill[i + 1].assign(static_cast<std::size_t>(omega.lambda()[i]) + 1, 0);
    std::uint64_t count = 0;
    // Column order guarantees the left and upper neighbours are filled before a box.
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == boxes.size()) {
            ++count;
            return;
        }
        auto [i, j] = boxes[k];
        int lo = 1;
        if (omega.contains(i, j - 1)) lo = std::max(lo, fill[i][j - 1]);
        if (omega.contains(i - 1, j)) lo = std::max(lo, fill[i - 1][j] + 1);
        for (int v = lo; v <= N; ++v) {
            fill[i][j] = v;
            rec(k + 1);
        }
        fill[i][j] = 0;
    };
    rec(0);
    return count;
}

void check_fits(const SkewDiagram& omega, int N) {
    if (omega.max_column_height() > N)
        throw Error(ErrorKind::ShapeExceedsDimension,
                    "diagram " + omega.str() + " has a column taller than N = " + std::to_string(N));
}

std::vector<SkewDiagram> enumerate_skew(int boxes, int max_rows, int max_cols) {
    std::vector<SkewDiagram> out;
    std::vector<int> lam, mu;
    // Rows are chosen top to bottom as pairs (λ_i, μ_i) that keep both sequences weakly decreasing.
    std::function<void(int, int)> rec = [&](int remaining, int row) {
        if (remaining == 0) {
            if (lam.empty() || lam[0] == mu[0] || mu.back() != 0) return;
            out.emplace_back(lam, mu);
            return;
        }
        if (row >= max_rows) return;
        int lmax = row == 0 ? max_cols : lam.back();
        int mmax = row == 0 ? max_cols : mu.back();
        for (int l = lmax; l >= 1; --l)
            for (int m = std::min(l, mmax); m >= 0; --m) {
                if (l - m > remaining) continue;
                lam.push_back(l);
                mu.push_back(m);
                rec(remaining - (l - m), row + 1);
                lam.pop_back();
                mu.pop_back();
            }
    };
    rec(boxes, 0);
    return out;
}

}  // namespace twyang
