#include "taucore/linalg.hpp"

#include <algorithm>
#include <bit>

namespace tauv {

int GF2Matrix::rank() {
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        size_t w = static_cast<size_t>(c >> 6);
        std::uint64_t b = bit(c);
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (data_[static_cast<size_t>(r) * words_ + w] & b) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            std::swap_ranges(data_.begin() + static_cast<long>(pivot) * static_cast<long>(words_),
                             data_.begin() + (static_cast<long>(pivot) + 1) * static_cast<long>(words_),
                             data_.begin() + static_cast<long>(rank) * static_cast<long>(words_));
        const std::uint64_t* prow = &data_[static_cast<size_t>(rank) * words_];
        for (int r = rank + 1; r < rows_; ++r) {
            std::uint64_t* row = &data_[static_cast<size_t>(r) * words_];
            if (row[w] & b)
                for (size_t i = w; i < words_; ++i) row[i] ^= prow[i];
        }
        ++rank;
    }
    return rank;
}

namespace {

std::uint64_t fp_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) r = (unsigned __int128)(r)*base % p;
        base = (unsigned __int128)(base)*base % p;
        exp >>= 1;
    }
    return r;
}

std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) { return fp_pow(a, p - 2, p); }

}  // namespace

int FpMatrix::rank() {
    std::vector<std::uint64_t> m = data_;
    auto at = [&](int r, int c) -> std::uint64_t& {
        return m[static_cast<size_t>(r) * cols_ + static_cast<size_t>(c)];
    };
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (at(r, c) % p_ != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(rank, j));
        std::uint64_t inv = fp_inv(at(rank, c), p_);
        for (int j = c; j < cols_; ++j)
            at(rank, j) = (unsigned __int128)(at(rank, j)) * inv % p_;
        for (int r = rank + 1; r < rows_; ++r) {
            std::uint64_t f = at(r, c) % p_;
            if (!f) continue;
            for (int j = c; j < cols_; ++j) {
                std::uint64_t sub = (unsigned __int128)(f)*at(rank, j) % p_;
                at(r, j) = (at(r, j) + p_ - sub) % p_;
            }
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<std::uint64_t>> FpMatrix::kernel() const {
    std::vector<std::uint64_t> m = data_;
    auto at = [&](int r, int c) -> std::uint64_t& {
        return m[static_cast<size_t>(r) * cols_ + static_cast<size_t>(c)];
    };
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (at(r, c) % p_ != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(rank, j));
        std::uint64_t inv = fp_inv(at(rank, c), p_);
        for (int j = c; j < cols_; ++j)
            at(rank, j) = (unsigned __int128)(at(rank, j)) * inv % p_;
        for (int r = 0; r < rows_; ++r) {
            if (r == rank) continue;
            std::uint64_t f = at(r, c) % p_;
            if (!f) continue;
            for (int j = c; j < cols_; ++j) {
                std::uint64_t sub = (unsigned __int128)(f)*at(rank, j) % p_;
                at(r, j) = (at(r, j) + p_ - sub) % p_;
            }
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<std::uint64_t>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<std::uint64_t> v(static_cast<size_t>(cols_), 0);
        v[static_cast<size_t>(free)] = 1;
        for (int r = 0; r < rank; ++r) {
            std::uint64_t coef = at(r, free) % p_;
            if (coef) v[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = p_ - coef;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int IntMatrix::rank_over_q() {
    // Bareiss fraction-free elimination; all intermediates stay integral.
    std::vector<Integer> m = data_;
    auto at = [&](int r, int c) -> Integer& {
        return m[static_cast<size_t>(r) * cols_ + static_cast<size_t>(c)];
    };
    Integer prev = 1;
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (at(r, c) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < cols_; ++j) at(pivot, j).swap(at(rank, j));
        for (int r = rank + 1; r < rows_; ++r) {
            for (int j = c + 1; j < cols_; ++j)
                at(r, j) = (at(rank, c) * at(r, j) - at(r, c) * at(rank, j)) / prev;
            at(r, c) = 0;
        }
        prev = at(rank, c);
        ++rank;
    }
    return rank;
}

int RationalMatrix::rank() const {
    std::vector<Rational> m = data_;
    auto at = [&](int r, int c) -> Rational& {
        return m[static_cast<size_t>(r) * cols_ + static_cast<size_t>(c)];
    };
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (at(r, c) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(rank, j));
        Rational inv = 1 / at(rank, c);
        for (int j = c; j < cols_; ++j) at(rank, j) *= inv;
        for (int r = rank + 1; r < rows_; ++r) {
            Rational f = at(r, c);
            if (f == 0) continue;
            for (int j = c; j < cols_; ++j) at(r, j) -= f * at(rank, j);
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rational>> RationalMatrix::kernel() const {
    std::vector<Rational> m = data_;
    auto at = [&](int r, int c) -> Rational& {
        return m[static_cast<size_t>(r) * cols_ + static_cast<size_t>(c)];
    };
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (at(r, c) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(rank, j));
        Rational inv = 1 / at(rank, c);
        for (int j = c; j < cols_; ++j) at(rank, j) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == rank) continue;
            Rational f = at(r, c);
            if (f == 0) continue;
            for (int j = c; j < cols_; ++j) at(r, j) -= f * at(rank, j);
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<Rational> v(static_cast<size_t>(cols_));
        v[static_cast<size_t>(free)] = 1;
        for (int r = 0; r < rank; ++r)
            if (at(r, free) != 0)
                v[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = -at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace tauv
