#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace parry::detail {

// Suffix array + LCP array + sparse-table RMQ over one text. Gives O(1)
// longest-common-extension queries and O(m log n) factor lookups after an
// O(n log n) build.
class LcpIndex {
 public:
  explicit LcpIndex(std::string_view text) : text_(text), n_(static_cast<int>(text.size())) {
    if (n_ > 0) {
      build_suffix_array();
      build_lcp();
      build_rmq();
    }
  }

  int size() const { return n_; }
  const std::string& text() const { return text_; }
  const std::vector<int>& suffix_array() const { return sa_; }
  const std::vector<int>& lcp_array() const { return lcp_; }
  const std::vector<int>& ranks() const { return rank_; }

  // Longest common prefix of the suffixes starting at i and j.
  int lce(int i, int j) const {
    if (i == j) return n_ - i;
    if (i >= n_ || j >= n_) return 0;
    int a = rank_[i], b = rank_[j];
    if (a > b) std::swap(a, b);
    return rmq(a + 1, b);
  }

  bool contains(std::string_view pat) const {
    if (pat.empty()) return true;
    if (n_ == 0) return false;
    int lo = 0, hi = n_;
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if (text_.compare(sa_[mid], pat.size(), pat) < 0)
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo < n_ && text_.compare(sa_[lo], pat.size(), pat) == 0;
  }

 private:
  void build_suffix_array() {
    // Doubling with counting sort over cyclic shifts of text + sentinel.
    std::string s = text_;
    s.push_back('\0');
    int n = static_cast<int>(s.size());
    std::vector<int> p(n), c(n), pn(n), cn(n);
    {
      const int alphabet = 256;
      std::vector<int> cnt(std::max(alphabet, n), 0);
      for (int i = 0; i < n; ++i) cnt[static_cast<unsigned char>(s[i])]++;
      for (int i = 1; i < alphabet; ++i) cnt[i] += cnt[i - 1];
      for (int i = 0; i < n; ++i) p[--cnt[static_cast<unsigned char>(s[i])]] = i;
      c[p[0]] = 0;
      int classes = 1;
      for (int i = 1; i < n; ++i) {
        if (s[p[i]] != s[p[i - 1]]) ++classes;
        c[p[i]] = classes - 1;
      }
      std::vector<int> cnt2;
      for (int h = 0; (1 << h) < n; ++h) {
        for (int i = 0; i < n; ++i) {
          pn[i] = p[i] - (1 << h);
          if (pn[i] < 0) pn[i] += n;
        }
        cnt2.assign(classes, 0);
        for (int i = 0; i < n; ++i) cnt2[c[pn[i]]]++;
        for (int i = 1; i < classes; ++i) cnt2[i] += cnt2[i - 1];
        for (int i = n - 1; i >= 0; --i) p[--cnt2[c[pn[i]]]] = pn[i];
        cn[p[0]] = 0;
        classes = 1;
        for (int i = 1; i < n; ++i) {
          std::pair<int, int> cur{c[p[i]], c[(p[i] + (1 << h)) % n]};
          std::pair<int, int> prev{c[p[i - 1]], c[(p[i - 1] + (1 << h)) % n]};
          if (cur != prev) ++classes;
          cn[p[i]] = classes - 1;
        }
        c.swap(cn);
        if (classes == n) break;
      }
    }
    sa_.assign(p.begin() + 1, p.end());  // drop the sentinel suffix
    rank_.assign(n_, 0);
    for (int i = 0; i < n_; ++i) rank_[sa_[i]] = i;
  }

  void build_lcp() {  // Kasai
    lcp_.assign(n_, 0);
    int k = 0;
    for (int i = 0; i < n_; ++i) {
      if (rank_[i] == 0) {
        k = 0;
        continue;
      }
      int j = sa_[rank_[i] - 1];
      while (i + k < n_ && j + k < n_ && text_[i + k] == text_[j + k]) ++k;
      lcp_[rank_[i]] = k;
      if (k > 0) --k;
    }
  }

  void build_rmq() {
    log2_.assign(n_ + 1, 0);
    for (int i = 2; i <= n_; ++i) log2_[i] = log2_[i / 2] + 1;
    int levels = log2_[n_] + 1;
    table_.assign(levels, std::vector<int>(n_));
    table_[0] = lcp_;
    for (int k = 1; k < levels; ++k) {
      for (int i = 0; i + (1 << k) <= n_; ++i)
        table_[k][i] = std::min(table_[k - 1][i], table_[k - 1][i + (1 << (k - 1))]);
    }
  }

  // min lcp_[l..r], inclusive; requires l <= r.
  int rmq(int l, int r) const {
    int k = log2_[r - l + 1];
    return std::min(table_[k][l], table_[k][r - (1 << k) + 1]);
  }

  std::string text_;
  int n_;
  std::vector<int> sa_, rank_, lcp_;
  std::vector<std::vector<int>> table_;
  std::vector<int> log2_;
};

// Forward and backward extension queries over one text (second index built
// on the reversed text).
class BidirLce {
 public:
  explicit BidirLce(std::string_view text)
      : n_(static_cast<int>(text.size())),
        fwd_(text),
        bwd_(std::string(text.rbegin(), text.rend())) {}

  int size() const { return n_; }
  const LcpIndex& forward_index() const { return fwd_; }

  // Longest l with text[i..i+l) == text[j..j+l).
  int forward(int i, int j) const { return fwd_.lce(i, j); }

  // Longest l with text[i-l..i) == text[j-l..j).
  int backward(int i, int j) const {
    if (i == 0 || j == 0) return 0;
    return bwd_.lce(n_ - i, n_ - j);
  }

 private:
  int n_;
  LcpIndex fwd_;
  LcpIndex bwd_;
};

// Invokes fn(start, end) for every maximal interval [start, end) of the
// text that has period `per` and length >= 2*per. Intervals may be emitted
// more than once; consecutive duplicates are already skipped.
template <class Fn>
void for_each_periodic_interval(const BidirLce& lce, std::size_t per, Fn&& fn) {
  const std::size_t n = static_cast<std::size_t>(lce.size());
  std::size_t last_s = static_cast<std::size_t>(-1), last_e = 0;
  for (std::size_t j = per; j < n; j += per) {
    std::size_t i = j - per;
    std::size_t f = static_cast<std::size_t>(lce.forward(static_cast<int>(i), static_cast<int>(j)));
    std::size_t b = static_cast<std::size_t>(lce.backward(static_cast<int>(i), static_cast<int>(j)));
    if (f + b >= per) {
      std::size_t s = i - b;
      std::size_t e = j + f;
      if (s == last_s && e == last_e) continue;
      last_s = s;
      last_e = e;
      fn(s, e);
    }
  }
}

}  // namespace parry::detail
