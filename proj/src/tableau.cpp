#include "nsym/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nsym/errors.hpp"

namespace nsym {

// ---------------------------------------------------------------- SkewTableau

SkewTableau::SkewTableau(Composition inner, std::vector<Row> rows)
    : inner_(std::move(inner)), rows_(std::move(rows)) {
  for (const Row& r : rows_)
    for (int v : r)
      if (v <= 0) throw InvalidArgument("tableau entries must be positive");
  if (rows_.size() < inner_.length()) rows_.resize(inner_.length());
  while (rows_.size() > inner_.length() && rows_.back().empty()) rows_.pop_back();
}

std::span<const int> SkewTableau::row(std::size_t i) const {
  if (i >= rows_.size()) return {};
  return rows_[i];
}

int SkewTableau::inner_length(std::size_t i) const {
  return i < inner_.length() ? inner_[i] : 0;
}

std::size_t SkewTableau::cell_count() const {
  std::size_t n = 0;
  for (const Row& r : rows_) n += r.size();
  return n;
}

int SkewTableau::max_entry() const {
  int m = 0;
  for (const Row& r : rows_)
    for (int v : r) m = std::max(m, v);
  return m;
}

IntVector SkewTableau::row_lengths() const {
  IntVector out;
  for (const Row& r : rows_) out.push_back(static_cast<int>(r.size()));
  return out;
}

Composition SkewTableau::outer_shape() const {
  std::vector<int> parts;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const int len = inner_length(i) + static_cast<int>(rows_[i].size());
    if (len == 0)
      throw InvalidArgument("outer shape is not a composition: empty row " +
                            std::to_string(i + 1));
    parts.push_back(len);
  }
  return Composition(std::move(parts));
}

std::vector<int> SkewTableau::first_column() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (inner_length(i) == 0 && !rows_[i].empty()) out.push_back(rows_[i].front());
  return out;
}

std::string SkewTableau::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) os << " / ";
    for (int k = 0; k < inner_length(i); ++k) os << "X ";
    for (std::size_t k = 0; k < rows_[i].size(); ++k) os << (k ? " " : "") << rows_[i][k];
  }
  os << ']';
  return os.str();
}

// ----------------------------------------------------------------- predicates

std::vector<int> reading_word(const SkewTableau& t) {
  std::vector<int> word;
  word.reserve(t.cell_count());
  for (const auto& r : t.rows()) word.insert(word.end(), r.rbegin(), r.rend());
  return word;
}

IntVector content(const SkewTableau& t, int m) {
  IntVector c(static_cast<std::size_t>(std::max(m, 0)), 0);
  for (const auto& r : t.rows())
    for (int v : r) {
      if (v > m)
        throw InvalidArgument("content: entry " + std::to_string(v) + " exceeds " +
                              std::to_string(m));
      ++c[v - 1];
    }
  return c;
}

namespace {

bool rows_weakly_increase(const SkewTableau& t) {
  for (const auto& r : t.rows())
    if (!std::is_sorted(r.begin(), r.end())) return false;
  return true;
}

}  // namespace

bool is_immaculate(const SkewTableau& t) {
  if (!rows_weakly_increase(t)) return false;
  const auto col = t.first_column();
  return std::adjacent_find(col.begin(), col.end(), std::greater_equal<>()) == col.end();
}

bool is_semistandard(const SkewTableau& t) {
  if (!rows_weakly_increase(t)) return false;
  std::vector<int> last;  // last filled value seen in each column, 0 if none
  for (std::size_t i = 0; i < t.row_count(); ++i) {
    const auto r = t.row(i);
    const std::size_t start = static_cast<std::size_t>(t.inner_length(i));
    if (last.size() < start + r.size()) last.resize(start + r.size(), 0);
    for (std::size_t k = 0; k < r.size(); ++k) {
      int& above = last[start + k];
      if (above != 0 && above >= r[k]) return false;
      above = r[k];
    }
  }
  return true;
}

bool is_lattice_word(std::span<const int> word) {
  std::vector<int> counts;
  for (int v : word) {
    if (static_cast<std::size_t>(v) >= counts.size()) counts.resize(v + 1, 0);
    ++counts[v];
    if (v > 1 && counts[v] > counts[v - 1]) return false;
  }
  return true;
}

bool is_yamanouchi(const SkewTableau& t) {
  const auto w = reading_word(t);
  return is_lattice_word(w);
}

// ---------------------------------------------------------------- enumeration

namespace {

class FillingSearch {
 public:
  FillingSearch(const Composition& inner, const IntVector& content,
                const FillingOptions& options,
                const std::function<void(const SkewTableau&)>& visit)
      : inner_(inner), options_(options), visit_(visit), remaining_(content) {
    for (int c : content) {
      if (c < 0) throw InvalidArgument("content entries must be nonnegative");
      left_ += c;
    }
    letters_ = static_cast<int>(content.size());
    word_counts_.assign(letters_ + 2, 0);
    std::size_t width = static_cast<std::size_t>(left_);
    for (int p : inner) width += static_cast<std::size_t>(p);
    if (options_.outer) {
      const auto& outer = *options_.outer;
      for (std::size_t i = 0; i < outer.length(); ++i)
        if (outer[i] < inner_at(i)) fixed_shape_ok_ = false;
      if (outer.length() < inner.length()) fixed_shape_ok_ = false;
      if (outer.size() != inner.size() + left_) fixed_shape_ok_ = false;
    }
    column_last_.assign(width + 1, 0);
    // Rows past the inner shape each start a new column-1 entry, so there
    // are at most `letters_` of them; fixed capacity keeps row references
    // stable across the recursion.
    std::size_t max_rows = inner.length() + static_cast<std::size_t>(letters_) + 1;
    if (options_.outer) max_rows = std::max(max_rows, options_.outer->length() + 1);
    rows_.reserve(max_rows);
  }

  void run() {
    if (!fixed_shape_ok_) return;
    fill_row(0);
  }

 private:
  int inner_at(std::size_t i) const { return i < inner_.length() ? inner_[i] : 0; }

  void emit() {
    visit_(SkewTableau(inner_, rows_));
  }

  void fill_row(std::size_t i) {
    if (left_ == 0) {
      if (options_.outer && options_.outer->length() > i) {
        // Remaining rows of the fixed shape must have no filled cells.
        for (std::size_t j = i; j < options_.outer->length(); ++j)
          if ((*options_.outer)[j] != inner_at(j)) return;
      }
      emit();
      return;
    }
    int lo, hi;
    if (options_.outer) {
      if (i >= options_.outer->length()) return;
      lo = hi = (*options_.outer)[i] - inner_at(i);
      if (hi > left_) return;
    } else {
      lo = i < inner_.length() ? 0 : 1;
      hi = left_;
    }
    int min_first = 1;
    if (i >= inner_.length() && i > 0 && i - 1 >= inner_.length())
      min_first = rows_[i - 1].front() + 1;
    rows_.emplace_back();
    for (int len = lo; len <= hi; ++len) place(i, len, min_first);
    rows_.pop_back();
  }

  void place(std::size_t i, int len, int min_value) {
    auto& row = rows_[i];
    if (static_cast<int>(row.size()) == len) {
      finish_row(i);
      return;
    }
    const std::size_t col = static_cast<std::size_t>(inner_at(i)) + row.size();
    int lo = row.empty() ? min_value : row.back();
    if (options_.strict_columns && column_last_[col] != 0)
      lo = std::max(lo, column_last_[col] + 1);
    // Cells still to place in this row need letters >= the current one.
    for (int v = lo; v <= letters_; ++v) {
      if (remaining_[v - 1] == 0) continue;
      if (++nodes_ > options_.max_nodes)
        throw ResourceLimit("tableau search exceeded " + std::to_string(options_.max_nodes) +
                            " nodes");
      --remaining_[v - 1];
      --left_;
      const int saved = column_last_[col];
      column_last_[col] = v;
      row.push_back(v);
      place(i, len, min_value);
      row.pop_back();
      column_last_[col] = saved;
      ++left_;
      ++remaining_[v - 1];
    }
  }

  void finish_row(std::size_t i) {
    const auto& row = rows_[i];
    if (options_.yamanouchi) {
      std::size_t k = row.size();
      bool ok = true;
      while (k > 0) {
        const int v = row[--k];
        ++word_counts_[v];
        if (v > 1 && word_counts_[v] > word_counts_[v - 1]) {
          ok = false;
          break;
        }
      }
      // Undo exactly the increments that were made.
      auto undo = [&] {
        for (std::size_t j = row.size(); j-- > k;) --word_counts_[row[j]];
      };
      if (!ok) {
        undo();
        return;
      }
      fill_row(i + 1);
      undo();
      return;
    }
    fill_row(i + 1);
  }

  const Composition& inner_;
  const FillingOptions& options_;
  const std::function<void(const SkewTableau&)>& visit_;
  IntVector remaining_;
  int left_ = 0;
  int letters_ = 0;
  bool fixed_shape_ok_ = true;
  std::vector<SkewTableau::Row> rows_;
  std::vector<int> column_last_;
  std::vector<int> word_counts_;
  std::size_t nodes_ = 0;
};

}  // namespace

void for_each_filling(const Composition& inner, const IntVector& content,
                      const FillingOptions& options,
                      const std::function<void(const SkewTableau&)>& visit) {
  FillingSearch(inner, content, options, visit).run();
}

std::size_t count_fillings(const Composition& inner, const IntVector& content,
                           const FillingOptions& options) {
  std::size_t n = 0;
  for_each_filling(inner, content, options, [&](const SkewTableau&) { ++n; });
  return n;
}

std::vector<SkewTableau> enumerate_skew_immaculate(const Composition& inner,
                                                   const IntVector& content,
                                                   const std::optional<Composition>& outer) {
  std::vector<SkewTableau> out;
  FillingOptions opts;
  opts.outer = outer;
  for_each_filling(inner, content, opts, [&](const SkewTableau& t) { out.push_back(t); });
  return out;
}

std::size_t count_immaculate_LR(const Composition& alpha, const Composition& lambda,
                                const Composition& gamma) {
  if (!lambda.is_partition())
    throw InvalidArgument("count_immaculate_LR: content " + lambda.to_string() +
                          " is not a partition");
  FillingOptions opts;
  opts.outer = gamma;
  opts.yamanouchi = true;
  return count_fillings(alpha, lambda.vector(), opts);
}

LinearCombination immaculate_LR_expansion(const Composition& alpha,
                                          const Composition& lambda) {
  if (!lambda.is_partition())
    throw InvalidArgument("immaculate_LR_expansion: content " + lambda.to_string() +
                          " is not a partition");
  LinearCombination out(Basis::S);
  FillingOptions opts;
  opts.yamanouchi = true;
  for_each_filling(alpha, lambda.vector(), opts,
                   [&](const SkewTableau& t) { out.add(t.outer_shape(), 1); });
  return out;
}

// ---------------------------------------------------------- T_alpha^beta

TableauWithSigma::TableauWithSigma(SkewTableau t, Permutation s, const Composition& beta)
    : tableau(std::move(t)), sigma(std::move(s)) {
  auto expected = sigma_of(tableau, beta);
  if (!expected || !(*expected == sigma))
    throw InvalidArgument("sigma " + sigma.to_string() + " does not match c(T) - beta + id for " +
                          tableau.to_string());
}

std::optional<Permutation> sigma_of(const SkewTableau& t, const Composition& beta) {
  const int m = static_cast<int>(beta.length());
  if (t.max_entry() > m) return std::nullopt;
  IntVector c = content(t, m);
  std::vector<int> images(m);
  std::vector<bool> seen(m + 1, false);
  for (int j = 0; j < m; ++j) {
    const int v = c[j] - beta[j] + (j + 1);
    if (v < 1 || v > m || seen[v]) return std::nullopt;
    seen[v] = true;
    images[j] = v;
  }
  return Permutation(std::move(images));
}

namespace {

/// content beta + sigma - id, or nullopt when an entry is negative.
std::optional<IntVector> shifted_content(const Composition& beta, const Permutation& sigma) {
  IntVector c(beta.length());
  for (std::size_t j = 0; j < beta.length(); ++j) {
    c[j] = beta[j] + sigma.images()[j] - static_cast<int>(j + 1);
    if (c[j] < 0) return std::nullopt;
  }
  return c;
}

LinearCombination apply_right_pieri(const LinearCombination& f, int s) {
  LinearCombination out(Basis::S);
  for (const auto& [alpha, c] : f)
    for (const auto& beta : right_pieri_successors(alpha, s)) out.add(beta, c);
  return out;
}

}  // namespace

void for_each_T_alpha_beta(const Composition& alpha, const Composition& beta,
                           const std::function<void(const TableauWithSigma&)>& visit) {
  for (const Permutation& sigma : permutations(static_cast<int>(beta.length()))) {
    auto c = shifted_content(beta, sigma);
    if (!c) continue;
    for_each_filling(alpha, *c, FillingOptions{}, [&](const SkewTableau& t) {
      visit(TableauWithSigma(t, sigma, beta));
    });
  }
}

std::vector<TableauWithSigma> enumerate_T_alpha_beta(const Composition& alpha,
                                                     const Composition& beta) {
  std::vector<TableauWithSigma> out;
  for_each_T_alpha_beta(alpha, beta, [&](const TableauWithSigma& t) { out.push_back(t); });
  return out;
}

LinearCombination signed_product(const Composition& alpha, const Composition& beta) {
  LinearCombination total(Basis::S);
  for (const Permutation& sigma : permutations(static_cast<int>(beta.length()))) {
    auto steps = shifted_content(beta, sigma);
    if (!steps) continue;
    LinearCombination cur(Basis::S, alpha);
    for (int step : *steps)
      if (step > 0) cur = apply_right_pieri(cur, step);
    total.add_scaled(cur, sigma.sign());
  }
  return total;
}

LinearCombination signed_product_by_tableaux(const Composition& alpha,
                                             const Composition& beta) {
  LinearCombination total(Basis::S);
  for_each_T_alpha_beta(alpha, beta, [&](const TableauWithSigma& t) {
    total.add(t.tableau.outer_shape(), t.sigma.sign());
  });
  return total;
}

Coeff signed_coefficient(const Composition& alpha, const Composition& beta,
                         const Composition& gamma) {
  if (gamma.size() != alpha.size() + beta.size()) return 0;
  Coeff total = 0;
  FillingOptions opts;
  opts.outer = gamma;
  for (const Permutation& sigma : permutations(static_cast<int>(beta.length()))) {
    auto c = shifted_content(beta, sigma);
    if (!c) continue;
    const auto n = static_cast<Coeff>(count_fillings(alpha, *c, opts));
    total = checked_add(total, checked_mul(n, sigma.sign()));
  }
  return total;
}

}  // namespace nsym
