#include "hcs/combinat/shifted_tableau.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hcs {

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("StrictPartition: empty");
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("StrictPartition: parts must be positive");
        if (i > 0 && parts_[i] >= parts_[i - 1]) throw std::invalid_argument("StrictPartition: parts must be strictly decreasing");
        n_ += parts_[i];
    }
}

std::string StrictPartition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
}

std::string StrictPartition::key() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) s += (i ? "-" : "") + std::to_string(parts_[i]);
    return s;
}

std::vector<StrictPartition> enumerate_strict_partitions(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_strict_partitions: n must be positive");
    std::vector<StrictPartition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p - 1);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

StrictPartition parse_strict_partition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("shape: empty part in '" + text + "'");
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("shape: malformed part '" + tok + "'");
        parts.push_back(v);
    }
    return StrictPartition(std::move(parts));
}

std::string to_string(BruhatStep s) {
    switch (s) {
        case BruhatStep::Up: return "up";
        case BruhatStep::Down: return "down";
        case BruhatStep::NonStandardRow: return "non-standard-row";
        case BruhatStep::NonStandardColumn: return "non-standard-column";
    }
    return "?";
}

ShiftedTableau::ShiftedTableau(StrictPartition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.length()) throw std::invalid_argument("ShiftedTableau: row count");
    for (int i = 1; i <= shape_.length(); ++i)
        if (static_cast<int>(rows_[static_cast<size_t>(i - 1)].size()) != shape_.part(i))
            throw std::invalid_argument("ShiftedTableau: row length");
    index();
}

void ShiftedTableau::index() {
    const int n = shape_.n();
    boxes_.assign(static_cast<size_t>(n), Box{});
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int i = 1; i <= shape_.length(); ++i) {
        const auto& row = rows_[static_cast<size_t>(i - 1)];
        for (size_t c = 0; c < row.size(); ++c) {
            int k = row[c];
            if (k < 1 || k > n || seen[static_cast<size_t>(k)]) throw std::invalid_argument("ShiftedTableau: filling is not a bijection onto 1..n");
            seen[static_cast<size_t>(k)] = true;
            boxes_[static_cast<size_t>(k - 1)] = Box{i, i + static_cast<int>(c)};
        }
    }
}

bool ShiftedTableau::contains(int i, int j) const {
    return i >= 1 && i <= shape_.length() && j >= i && j < i + shape_.part(i);
}

bool ShiftedTableau::is_standard() const {
    for (int i = 1; i <= shape_.length(); ++i) {
        for (int j = i; j < i + shape_.part(i); ++j) {
            if (contains(i, j + 1) && at(i, j + 1) < at(i, j)) return false;
            if (contains(i + 1, j) && at(i + 1, j) < at(i, j)) return false;
        }
    }
    return true;
}

std::vector<int> ShiftedTableau::diagonal() const {
    std::vector<int> d;
    for (int i = 1; i <= shape_.length(); ++i) d.push_back(at(i, i));
    return d;
}

std::vector<int> ShiftedTableau::row_reading() const {
    std::vector<int> out;
    for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
    return out;
}

std::vector<int> ShiftedTableau::column_reading() const {
    std::vector<int> out;
    if (shape_.length() == 0) return out;
    for (int j = 1; j <= shape_.part(1); ++j)
        for (int i = 1; i <= std::min(j, shape_.length()); ++i)
            if (contains(i, j)) out.push_back(at(i, j));
    return out;
}

ShiftedTableau ShiftedTableau::act(const Permutation& s) const {
    if (s.n() != n()) throw std::invalid_argument("ShiftedTableau::act: size mismatch");
    auto rows = rows_;
    for (auto& row : rows)
        for (int& k : row) k = s(k);
    return ShiftedTableau(shape_, std::move(rows));
}

ShiftedTableau ShiftedTableau::act_simple(int k) const { return act(Permutation::simple(k, n())); }

std::string ShiftedTableau::render() const {
    const int width = static_cast<int>(std::to_string(n()).size()) + 1;
    std::ostringstream os;
    for (int i = 1; i <= shape_.length(); ++i) {
        os << std::string(static_cast<size_t>(width * (i - 1)), ' ');
        for (int k : rows_[static_cast<size_t>(i - 1)]) {
            std::string s = std::to_string(k);
            os << std::string(static_cast<size_t>(width) - s.size(), ' ') << s;
        }
        if (i < shape_.length()) os << '\n';
    }
    return os.str();
}

std::string ShiftedTableau::key() const {
    std::string s;
    auto r = row_reading();
    for (size_t i = 0; i < r.size(); ++i) s += (i ? "-" : "") + std::to_string(r[i]);
    return s;
}

nlohmann::ordered_json ShiftedTableau::to_json() const {
    nlohmann::ordered_json j;
    j["shape"] = shape_.parts();
    j["rows"] = rows_;
    return j;
}

ShiftedTableau ShiftedTableau::from_json(const nlohmann::ordered_json& j) {
    return ShiftedTableau(StrictPartition(j.at("shape").get<std::vector<int>>()),
                          j.at("rows").get<std::vector<std::vector<int>>>());
}

ShiftedTableau row_tableau(const StrictPartition& shape) {
    std::vector<std::vector<int>> rows;
    int k = 1;
    for (int p : shape.parts()) {
        std::vector<int> row;
        for (int c = 0; c < p; ++c) row.push_back(k++);
        rows.push_back(std::move(row));
    }
    return ShiftedTableau(shape, std::move(rows));
}

ShiftedTableau column_tableau(const StrictPartition& shape) {
    std::vector<std::vector<int>> rows;
    for (int p : shape.parts()) rows.emplace_back(static_cast<size_t>(p), 0);
    int k = 1;
    for (int j = 1; j <= shape.part(1); ++j)
        for (int i = 1; i <= std::min(j, shape.length()); ++i)
            if (j < i + shape.part(i)) rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - i)] = k++;
    return ShiftedTableau(shape, std::move(rows));
}

std::vector<ShiftedTableau> enumerate_standard(const StrictPartition& shape) {
    std::vector<ShiftedTableau> out;
    std::vector<std::vector<int>> rows;
    for (int p : shape.parts()) rows.emplace_back(static_cast<size_t>(p), 0);
    std::vector<int> filled(static_cast<size_t>(shape.length()), 0);  // boxes filled per row
    std::function<void(int)> rec = [&](int k) {
        if (k > shape.n()) {
            out.emplace_back(shape, rows);
            return;
        }
        for (int i = 1; i <= shape.length(); ++i) {
            int c = filled[static_cast<size_t>(i - 1)];
            if (c == shape.part(i)) continue;
            int j = i + c;  // next free column in row i
            // The box above, (i-1, j), must already be filled if it is in the diagram.
            if (i > 1 && j < i - 1 + shape.part(i - 1) && filled[static_cast<size_t>(i - 2)] <= j - (i - 1)) continue;
            rows[static_cast<size_t>(i - 1)][static_cast<size_t>(c)] = k;
            ++filled[static_cast<size_t>(i - 1)];
            rec(k + 1);
            --filled[static_cast<size_t>(i - 1)];
            rows[static_cast<size_t>(i - 1)][static_cast<size_t>(c)] = 0;
        }
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<std::vector<int>, std::vector<int>> readings(const ShiftedTableau& t) {
    return {t.row_reading(), t.column_reading()};
}

namespace {

void split(const std::vector<int>& seq, int k, std::vector<int>& after, std::vector<int>& before) {
    bool seen = false;
    for (int v : seq) {
        if (v == k) {
            seen = true;
        } else if (v < k) {
            (seen ? after : before).push_back(v);
        }
    }
}

}  // namespace

Subsequences subsequences(const ShiftedTableau& t, int k) {
    if (k < 1 || k > t.n()) throw std::invalid_argument("subsequences: k out of range");
    Subsequences s;
    split(t.row_reading(), k, s.A, s.B);
    split(t.column_reading(), k, s.A_star, s.B_star);
    return s;
}

Permutation w_of(const ShiftedTableau& t) {
    auto p = t.column_reading();
    const int n = t.n();
    std::vector<int> w(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) w[static_cast<size_t>(k - 1)] = p[static_cast<size_t>(n - k)];
    return Permutation(std::move(w));
}

Permutation s_of(const ShiftedTableau& t) {
    ShiftedTableau c = column_tableau(t.shape());
    std::vector<int> s(static_cast<size_t>(t.n()));
    for (int k = 1; k <= t.n(); ++k) {
        Box b = t.box_of(k);
        s[static_cast<size_t>(k - 1)] = c.at(b.row, b.col);
    }
    return Permutation(std::move(s));
}

ReducedWords reduced_words(const ShiftedTableau& t) {
    if (!t.is_standard()) throw std::invalid_argument("reduced_words: tableau is not standard");
    ReducedWords r;
    const int n = t.n();
    for (int k = 2; k <= n; ++k) {
        int b_star = static_cast<int>(subsequences(t, k).B_star.size());
        for (int p = 1; p <= b_star; ++p) r.w.push_back(k - p);
    }
    for (int k = n; k >= 2; --k) {
        int a_star = static_cast<int>(subsequences(t, k).A_star.size());
        for (int p = a_star; p >= 1; --p) r.s.push_back(k - p);
    }
    return r;
}

BruhatStep bruhat_step(const ShiftedTableau& t, int k) {
    if (k < 1 || k >= t.n()) throw std::invalid_argument("bruhat_step: k out of range");
    Box a = t.box_of(k), b = t.box_of(k + 1);
    if (a.row == b.row && b.col == a.col + 1) return BruhatStep::NonStandardRow;
    if (a.col == b.col && b.row == a.row + 1) return BruhatStep::NonStandardColumn;
    if (b.row > a.row && b.col < a.col) return BruhatStep::Up;
    if (b.row < a.row && b.col > a.col) return BruhatStep::Down;
    throw std::invalid_argument("bruhat_step: tableau is not standard");
}

}  // namespace hcs
