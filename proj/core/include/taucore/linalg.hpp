#ifndef TAUCORE_LINALG_HPP
#define TAUCORE_LINALG_HPP

#include <cstdint>
#include <vector>

#include "taucore/rational.hpp"

namespace tauv {

/// Dense matrix over GF(2), rows packed 64 columns per word.
class GF2Matrix {
  public:
    GF2Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64),
          data_(static_cast<size_t>(rows) * words_, 0) {}

    void set(int r, int c) { data_[idx(r, c)] |= bit(c); }
    bool get(int r, int c) const { return data_[idx(r, c)] & bit(c); }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    /// Destructive row elimination.
    int rank();

  private:
    size_t idx(int r, int c) const {
        return static_cast<size_t>(r) * words_ + static_cast<size_t>(c >> 6);
    }
    static std::uint64_t bit(int c) { return std::uint64_t(1) << (c & 63); }
    int rows_, cols_;
    size_t words_;
    std::vector<std::uint64_t> data_;
};

/// Dense matrix over GF(p), entries reduced mod p.
class FpMatrix {
  public:
    FpMatrix(int rows, int cols, std::uint64_t p)
        : rows_(rows), cols_(cols), p_(p),
          data_(static_cast<size_t>(rows) * cols, 0) {}

    void set(int r, int c, std::uint64_t v) { at(r, c) = v % p_; }
    void add(int r, int c, std::int64_t v) {
        std::int64_t m = static_cast<std::int64_t>(p_);
        at(r, c) = static_cast<std::uint64_t>(((static_cast<std::int64_t>(at(r, c)) + v) % m + m) % m);
    }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int rank();
    /// Basis of {x : Mx = 0}, one vector per free column.
    std::vector<std::vector<std::uint64_t>> kernel() const;

  private:
    std::uint64_t& at(int r, int c) {
        return data_[static_cast<size_t>(r) * cols_ + static_cast<size_t>(c)];
    }
    int rows_, cols_;
    std::uint64_t p_;
    std::vector<std::uint64_t> data_;
};

/// Dense integer matrix; rank over the rationals via fraction-free elimination.
class IntMatrix {
  public:
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {}

    void set(int r, int c, long long v) { at(r, c) = v; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int rank_over_q();

  private:
    Integer& at(int r, int c) {
        return data_[static_cast<size_t>(r) * cols_ + static_cast<size_t>(c)];
    }
    int rows_, cols_;
    std::vector<Integer> data_;
};

/// Dense matrix over the rationals with exact elimination; used where a
/// kernel basis is needed, not just a rank.
class RationalMatrix {
  public:
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    void set(int r, int c, Rational v) { at(r, c) = std::move(v); }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int rank() const;
    std::vector<std::vector<Rational>> kernel() const;

  private:
    Rational& at(int r, int c) {
        return data_[static_cast<size_t>(r) * cols_ + static_cast<size_t>(c)];
    }
    const Rational& at(int r, int c) const {
        return data_[static_cast<size_t>(r) * cols_ + static_cast<size_t>(c)];
    }
    int rows_, cols_;
    std::vector<Rational> data_;
};

}  // namespace tauv

#endif
