#include "sqfree/squares.hpp"

#include <algorithm>

namespace sqfree {

void z_array(LetterSpan s, std::vector<std::size_t>& z) {
    const std::size_t n = s.size();
    z.assign(n, 0);
    if (n == 0) return;
    z[0] = n;
    std::size_t l = 0, r = 0;
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t k = 0;
        if (i < r) k = std::min(r - i, z[i - l]);
        while (i + k < n && s[k] == s[i + k]) ++k;
        z[i] = k;
        if (i + k > r) {
            l = i;
            r = i + k;
        }
    }
}

namespace {

struct LceScratch {
    std::vector<Letter> text;
    std::vector<std::size_t> fwd;
    std::vector<std::size_t> bwd;
};

LceScratch& scratch() {
    thread_local LceScratch s;
    return s;
}

}  // namespace

bool has_square_through(LetterSpan u, std::size_t q) {
    const std::size_t L = u.size();
    if (q >= L || L < 2) return false;
    auto& s = scratch();

    // fwd: u[q..] # u  -> lcp(q, q+p) at p, lcp(q-p, q) at (L-q)+1+(q-p)
    s.text.assign(u.begin() + static_cast<std::ptrdiff_t>(q), u.end());
    s.text.push_back(0);
    s.text.insert(s.text.end(), u.begin(), u.end());
    z_array(s.text, s.fwd);

    // bwd: rev(u[0..q)) # rev(u) -> lcs(q-1, q-1-p) at p, lcs(q-1, q-1+p) at q+1+(L-q-p)
    s.text.assign(u.rbegin() + static_cast<std::ptrdiff_t>(L - q), u.rend());
    s.text.push_back(0);
    s.text.insert(s.text.end(), u.rbegin(), u.rend());
    z_array(s.text, s.bwd);

    const std::size_t right = L - q;
    for (std::size_t p = 1; 2 * p <= L; ++p) {
        if (q + p < L) {
            const std::size_t ext_r = std::min(s.fwd[p], p);
            const std::size_t ext_l = q >= 1 ? std::min(s.bwd[q + 1 + (right - p)], p) : 0;
            if (ext_r >= 1 && ext_r + ext_l >= p) return true;
        }
        if (p <= q) {
            const std::size_t ext_r = std::min(s.fwd[right + 1 + (q - p)], p);
            const std::size_t ext_l = p < q ? std::min(s.bwd[p], p) : 0;
            if (ext_r >= 1 && ext_r + ext_l >= p) return true;
        }
    }
    return false;
}

bool has_square_through_scan(LetterSpan u, std::size_t q) {
    const std::size_t L = u.size();
    if (q >= L) return false;
    const Letter x = u[q];
    for (std::size_t p = 1; 2 * p <= L; ++p) {
        if (q + p < L && u[q + p] == x) {
            std::size_t r = 1;
            while (r < p && q + p + r < L && u[q + r] == u[q + p + r]) ++r;
            std::size_t l = 0;
            while (l < p && l < q && u[q - 1 - l] == u[q + p - 1 - l]) ++l;
            if (r + l >= p) return true;
        }
        if (p <= q && u[q - p] == x) {
            std::size_t r = 1;
            while (r < p && q + r < L && u[q - p + r] == u[q + r]) ++r;
            std::size_t l = 0;
            while (l < p && l + p < q && u[q - p - 1 - l] == u[q - 1 - l]) ++l;
            if (r + l >= p) return true;
        }
    }
    return false;
}

bool has_square_suffix_after(LetterSpan w, Letter x) {
    // u = w x, |u| = L; a square suffix of period p needs u[L-1-j] == u[L-1-p-j] for j < p.
    const std::size_t L = w.size() + 1;
    for (std::size_t p = 1; 2 * p <= L; ++p) {
        if (w[L - 1 - p] != x) continue;
        std::size_t j = 1;
        while (j < p && w[L - 1 - j] == w[L - 1 - p - j]) ++j;
        if (j == p) return true;
    }
    return false;
}

namespace {

bool square_free_range(LetterSpan u) {
    if (u.size() < 2) return true;
    const std::size_t mid = u.size() / 2;
    if (!square_free_range(u.first(mid)) || !square_free_range(u.subspan(mid))) return false;
    return u.size() <= 64 ? !has_square_through_scan(u, mid) : !has_square_through(u, mid);
}

}  // namespace

bool is_square_free(LetterSpan u) { return square_free_range(u); }

std::optional<FactorRef> find_square(LetterSpan u) {
    if (is_square_free(u)) return std::nullopt;
    // Prefix square-freeness is monotone: binary search the first prefix with a square.
    std::size_t lo = 1, hi = u.size();  // u.first(lo) square-free, u.first(hi) not
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        (is_square_free(u.first(mid)) ? lo : hi) = mid;
    }
    const std::size_t e = hi - 1;
    for (std::size_t p = 1; 2 * p <= hi; ++p) {
        bool match = true;
        for (std::size_t j = 0; j < p && match; ++j) match = u[e - j] == u[e - p - j];
        if (match) return FactorRef{hi - 2 * p, 2 * p};
    }
    return std::nullopt;  // unreachable
}

bool insertion_is_square_free_unchecked(LetterSpan w, std::size_t position, Letter x) {
    const std::size_t L = w.size();
    if (position > 0 && w[position - 1] == x) return false;
    if (position < L && w[position] == x) return false;
    if (position == L) return L == 0 || !has_square_suffix_after(w, x);

    thread_local std::vector<Letter> buf;
    buf.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(position));
    buf.push_back(x);
    buf.insert(buf.end(), w.begin() + static_cast<std::ptrdiff_t>(position), w.end());
    return buf.size() <= 512 ? !has_square_through_scan(buf, position) : !has_square_through(buf, position);
}

bool insertion_is_square_free(const Word& w, std::size_t position, Letter x) {
    if (position > w.size()) throw std::invalid_argument("insertion position out of range");
    if (x < 1 || x > w.alphabet_size()) throw std::invalid_argument("inserted letter outside alphabet");
    if (!is_square_free(w)) throw std::invalid_argument("word is not square-free");
    return insertion_is_square_free_unchecked(w.span(), position, x);
}

}  // namespace sqfree
