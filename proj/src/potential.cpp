#include "sqfree/potential.hpp"

#include <stdexcept>

#include "sqfree/squares.hpp"

namespace sqfree {

std::vector<std::size_t> PotentialReport::internal_positions(std::size_t word_length) const {
    std::vector<std::size_t> out;
    for (const Extension& e : extensions) {
        if (e.internal(word_length) && (out.empty() || out.back() != e.position)) out.push_back(e.position);
    }
    return out;
}

PotentialReport PotentialReport::from_extensions(std::vector<Extension> extensions, std::size_t word_length) {
    PotentialReport r;
    r.AE_value = extensions.size();
    for (const Extension& e : extensions) r.ae_value += e.internal(word_length) ? 1 : 0;
    r.extensions = std::move(extensions);
    r.is_extremal = r.AE_value == 0;
    r.is_almost_extremal = r.ae_value == 0;
    r.is_maximal = r.AE_value == r.ae_value;
    return r;
}

std::vector<Extension> square_free_extensions(const Word& w) {
    if (!is_square_free(w)) throw std::invalid_argument("word is not square-free");
    std::vector<Extension> out;
    for (std::size_t p = 0; p <= w.size(); ++p) {
        for (Letter x = 1; x <= w.alphabet_size(); ++x) {
            if (insertion_is_square_free_unchecked(w.span(), p, x)) out.push_back({p, x});
        }
    }
    return out;
}

PotentialReport potential(const Word& w) { return PotentialReport::from_extensions(square_free_extensions(w), w.size()); }

namespace {

std::size_t count_range(LetterSpan w, unsigned n, std::size_t first, std::size_t last) {
    std::size_t count = 0;
    for (std::size_t p = first; p <= last; ++p) {
        for (Letter x = 1; x <= n; ++x) count += insertion_is_square_free_unchecked(w, p, x) ? 1 : 0;
    }
    return count;
}

}  // namespace

std::size_t internal_potential_unchecked(LetterSpan w, unsigned alphabet_size) {
    if (w.size() < 2) return 0;
    return count_range(w, alphabet_size, 1, w.size() - 1);
}

std::size_t full_potential_unchecked(LetterSpan w, unsigned alphabet_size) {
    return count_range(w, alphabet_size, 0, w.size());
}

bool has_square_free_extension_unchecked(LetterSpan w, unsigned alphabet_size) {
    // Ends first: they succeed most often.
    for (Letter x = 1; x <= alphabet_size; ++x) {
        if (insertion_is_square_free_unchecked(w, w.size(), x)) return true;
    }
    for (std::size_t p = w.size(); p-- > 0;) {
        for (Letter x = 1; x <= alphabet_size; ++x) {
            if (insertion_is_square_free_unchecked(w, p, x)) return true;
        }
    }
    return false;
}

}  // namespace sqfree
