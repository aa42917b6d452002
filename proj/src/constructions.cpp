#include "sqfree/constructions.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <set>
#include <stdexcept>

#include "sqfree/potential.hpp"
#include "sqfree/squares.hpp"

namespace sqfree {

Letter LazyWord::letter_at(std::uint64_t index) const {
    if (index >= total_length_) throw std::out_of_range("lazy word index past end");
    return accessor_(index);
}

Word LazyWord::materialize(std::uint64_t max_length) const {
    if (total_length_ > max_length) throw std::length_error("lazy word too long to materialize");
    std::vector<Letter> letters(static_cast<std::size_t>(total_length_));
    for (std::uint64_t i = 0; i < total_length_; ++i) letters[static_cast<std::size_t>(i)] = accessor_(i);
    return Word(std::move(letters), alphabet_size_);
}

Word zimin(unsigned m) {
    if (m < 1) throw std::invalid_argument("Zimin depth must be at least 1");
    if (m > kMaxMaterializedZimin) throw std::length_error("Zimin word too long to materialize");
    const std::size_t len = (std::size_t{1} << m) - 1;
    std::vector<Letter> letters(len);
    for (std::size_t q = 1; q <= len; ++q) letters[q - 1] = static_cast<Letter>(zimin_letter(q));
    return Word(std::move(letters), m);
}

unsigned zimin_letter(std::uint64_t q) {
    if (q == 0) throw std::invalid_argument("Zimin positions are 1-based");
    return static_cast<unsigned>(std::countr_zero(q)) + 1;
}

LazyWord zimin_lazy(unsigned m) {
    if (m < 1 || m > 63) throw std::invalid_argument("Zimin depth must be in 1..63");
    return LazyWord((std::uint64_t{1} << m) - 1, m, [](std::uint64_t i) { return static_cast<Letter>(zimin_letter(i + 1)); });
}

std::uint64_t zimin_potential_closed(unsigned m) {
    if (m < 1) throw std::invalid_argument("Zimin depth must be at least 1");
    if (m > 56) throw std::overflow_error("Zimin potential overflows 64 bits");
    if (m <= 2) return 0;
    std::uint64_t ae = 2;
    for (unsigned k = 4; k <= m; ++k) ae = (std::uint64_t{1} << k) - 2 * k + 2 * ae;
    return ae;
}

std::uint64_t zimin_insertion_count(unsigned m) {
    if (m < 2) throw std::invalid_argument("insertion count needs m >= 2");
    if (m > 62) throw std::overflow_error("insertion count overflows 64 bits");
    return ((std::uint64_t{1} << m) - 2) - 2 * (m - 1);
}

Word substitute(const Word& w, const std::vector<Word>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("no blocks to substitute");
    const unsigned n = blocks.front().alphabet_size();
    std::vector<Letter> out;
    for (Letter v : w) {
        if (v < 1 || v > blocks.size()) throw std::invalid_argument("variable without a block");
        const Word& b = blocks[v - 1];
        out.insert(out.end(), b.begin(), b.end());
    }
    return Word(std::move(out), n);
}

void VerificationReport::add(std::string name, bool passed, std::string detail) {
    checks.push_back({std::move(name), passed, std::move(detail)});
}

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* VerificationReport::find(const std::string& name) const {
    for (const Check& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

namespace {

std::string square_witness(const Word& w) {
    const auto sq = find_square(w.span());
    if (!sq) return {};
    return "square " + format_word(w.factor(sq->offset, sq->length)) + " at offset " + std::to_string(sq->offset);
}

Word letters(std::string_view text, unsigned n) { return parse_word(text, n); }

}  // namespace

PropositionSParts proposition_s_words() {
    PropositionSParts p;
    p.A = letters("1213121", 4);
    p.B = letters("121312", 4);
    p.Y = letters("3", 4) + p.B + letters("4", 4);
    p.Z = letters("41", 4) + p.Y + p.A + letters("4", 4) + p.Y + p.B + letters("341", 4);
    p.constructed = p.Z + p.Y + p.A + letters("4", 4) + p.Y + p.A;
    p.displayed = letters("4231213124121312143121312412131231423121312412131214312131241213121", 4);
    return p;
}

VerificationReport verify_proposition_s(const Word& s) {
    VerificationReport r;
    const Word s4 = s.over(std::max(4u, s.alphabet_size()));
    r.add("square-free", is_square_free(s4), square_witness(s4));

    std::string unblocked;
    for (Letter x = 1; x <= 4; ++x) {
        if (is_square_free(s4.inserted(s4.size(), x))) unblocked += (unblocked.empty() ? "" : ",") + std::to_string(x);
    }
    r.add("end-extensions-squared", unblocked.empty(), unblocked.empty() ? "" : "square-free after appending " + unblocked);

    unblocked.clear();
    if (s4.empty()) {
        r.add("penultimate-insertions-squared", false, "empty word has no penultimate position");
        return r;
    }
    for (Letter x = 1; x <= 4; ++x) {
        if (is_square_free(s4.inserted(s4.size() - 1, x))) unblocked += (unblocked.empty() ? "" : ",") + std::to_string(x);
    }
    r.add("penultimate-insertions-squared", unblocked.empty(),
          unblocked.empty() ? "" : "square-free after inserting " + unblocked);
    return r;
}

VerificationReport verify_proposition_s_identities(const PropositionSParts& p) {
    VerificationReport r;
    const Word l1 = letters("1", 4), l3 = letters("3", 4), l4 = letters("4", 4), l41 = letters("41", 4);
    const Word B4 = p.B + l4;

    const Word eq1_lhs = p.Z + p.Y + p.A + l4 + p.Y + p.B + l4 + l1;
    const Word eq1_rhs = p.Z + p.Y + p.A + l4 + l3 + B4 + B4 + l1;
    r.add("identity-insert-4", eq1_lhs == eq1_rhs);

    const Word half = l41 + p.Y + p.A + l4 + p.Y + p.B + l3;
    const Word eq2_lhs = p.Z + p.Y + p.A + l4 + p.Y + p.B + l3 + l1;
    const Word eq2_rhs = half + half + l1;
    r.add("identity-insert-3", eq2_lhs == eq2_rhs);

    const Word ya4 = p.Y + p.A + l4;
    r.add("append-4-square", p.constructed + l4 == p.Z + ya4 + ya4);

    bool all_squared = true;
    for (Letter x = 1; x <= 3; ++x) all_squared = all_squared && !is_square_free(p.A.inserted(p.A.size(), x));
    r.add("A-end-extensions-squared", all_squared);
    return r;
}

Theorem5Word theorem5_word(unsigned n) {
    if (n < 4 || n > 5) throw std::invalid_argument("Zimin homomorphism word is built for 4 <= n <= 5");
    Theorem5Word t;
    t.n = n;
    std::vector<Letter> a(n);
    for (unsigned i = 0; i < n; ++i) a[i] = static_cast<Letter>(i + 1);
    const Word A(a, n);
    for (unsigned j = 1; j < n; ++j) {
        for (Letter e = 1; e <= n; ++e) {
            if (e == j || e == j + 1) continue;
            t.images.push_back(A.inserted(j, e));
        }
    }
    t.word = A + substitute(zimin(static_cast<unsigned>(t.images.size())), t.images);
    return t;
}

VerificationReport verify_theorem5(const Theorem5Word& w, unsigned t) {
    VerificationReport r;
    const unsigned n = w.n;
    if (t < 1 || t >= n) throw std::invalid_argument("t must satisfy 1 <= t < n");

    r.add("image-count", w.images.size() == std::size_t{n - 1} * (n - 2), std::to_string(w.images.size()));
    const std::set<Word> distinct(w.images.begin(), w.images.end());
    r.add("images-distinct", distinct.size() == w.images.size());
    const bool images_ok = std::all_of(w.images.begin(), w.images.end(),
                                       [&](const Word& img) { return img.size() == n + 1 && is_square_free(img); });
    r.add("images-square-free", images_ok);

    std::vector<Letter> a(n);
    for (unsigned i = 0; i < n; ++i) a[i] = static_cast<Letter>(i + 1);
    std::set<Word> internal;
    const Word A(a, n);
    for (const Extension& e : square_free_extensions(A)) {
        if (e.internal(A.size())) internal.insert(A.inserted(e.position, e.letter));
    }
    r.add("images-are-internal-extensions", internal == distinct);

    const bool sf = is_square_free(w.word);
    r.add("word-square-free", sf, sf ? std::to_string(w.word.size()) + " letters" : square_witness(w.word));

    std::string open;
    if (sf) {
        for (std::size_t p = 1; p <= t; ++p) {
            for (Letter x = 1; x <= n; ++x) {
                if (insertion_is_square_free_unchecked(w.word.span(), p, x)) {
                    open += (open.empty() ? "" : ",") + std::to_string(p) + ":" + std::to_string(x);
                }
            }
        }
    }
    r.add("inner-positions-blocked", sf && open.empty(),
          open.empty() ? "positions 1.." + std::to_string(t) : "square-free insertions " + open);
    return r;
}

Prop6Construction prop6_construction(const Word& A) {
    if (A.size() < 2) throw std::invalid_argument("A must have length at least 2");
    for (Letter l : A) {
        if (l > 3) throw std::invalid_argument("A must be a ternary word");
    }
    if (!is_square_free(A)) throw std::invalid_argument("A must be square-free");
    const std::size_t t = A.size();
    if (2 * t - 1 > 58) throw std::length_error("Zimin depth 2t-1 too large to index");

    const Word A5 = A.over(5);
    const Word S = letters("4", 5) + A5 + letters("5", 5);
    std::vector<Word> blocks;
    for (std::size_t j = 1; j < t; ++j) {
        blocks.push_back(S.inserted(j + 1, 4));
        blocks.push_back(S.inserted(j + 1, 5));
    }
    blocks.push_back(S.inserted(t + 1, 4));

    const unsigned depth = static_cast<unsigned>(2 * t - 1);
    const std::uint64_t zimin_len = (std::uint64_t{1} << depth) - 1;
    const std::uint64_t block_len = t + 3;
    const std::uint64_t head = zimin_len * block_len;
    auto shared_blocks = std::make_shared<std::vector<Word>>(blocks);
    auto shared_s = std::make_shared<Word>(S);
    LazyWord P(head + S.size(), 5, [=](std::uint64_t i) -> Letter {
        if (i >= head) return (*shared_s)[static_cast<std::size_t>(i - head)];
        const unsigned var = zimin_letter(i / block_len + 1);
        return (*shared_blocks)[var - 1][static_cast<std::size_t>(i % block_len)];
    });
    return Prop6Construction{A5, S, std::move(blocks), std::move(P)};
}

VerificationReport verify_prop6(const Prop6Construction& c, const Prop6Budget& budget) {
    VerificationReport r;
    const std::size_t t = c.A.size();
    const Word A3 = c.A.over(3);

    if (t <= 2000) {
        r.add("A-extremal", potential(A3).is_extremal);
    } else {
        r.add("A-extremal", true, "skipped: assumed by caller");
    }
    r.add("S-square-free", is_square_free(c.S), square_witness(c.S));

    r.add("block-count", c.blocks.size() == 2 * t - 1, std::to_string(c.blocks.size()));
    const bool lengths = std::all_of(c.blocks.begin(), c.blocks.end(), [&](const Word& b) { return b.size() == t + 3; });
    r.add("block-lengths", lengths, std::to_string(t + 3));
    std::string bad;
    for (std::size_t i = 0; i < c.blocks.size(); ++i) {
        if (!is_square_free(c.blocks[i])) bad += (bad.empty() ? "A" : ",A") + std::to_string(i + 1);
    }
    r.add("blocks-square-free", bad.empty(), bad);
    const std::set<Word> distinct(c.blocks.begin(), c.blocks.end());
    r.add("blocks-distinct", distinct.size() == c.blocks.size());

    // Inner slots of the suffix A inside P: after j letters of A, j = 1..t (j = t is just before the final 5).
    std::string open;
    for (std::size_t j = 1; j <= t; ++j) {
        for (Letter x = 1; x <= 3; ++x) {
            if (is_square_free(A3.inserted(j, x))) open += (open.empty() ? "" : ",") + std::to_string(j) + ":" + std::to_string(x);
        }
    }
    r.add("suffix-insertions-123-squared", open.empty(), open);

    std::string unmatched;
    for (std::size_t j = 1; j <= t; ++j) {
        for (Letter x = 4; x <= 5; ++x) {
            const Word modified = c.S.inserted(j + 1, x);
            const bool is_block = distinct.contains(modified);
            const bool adjacent_repeat = !is_block && j == t && x == 5;  // ...a_t 5 5
            if (!is_block && !adjacent_repeat) unmatched += (unmatched.empty() ? "" : ",") + std::to_string(j) + ":" + std::to_string(x);
        }
    }
    r.add("suffix-insertions-45-become-blocks", unmatched.empty(), unmatched);

    const unsigned max_depth = static_cast<unsigned>(std::min<std::size_t>(budget.substitution_depth, 2 * t - 1));
    std::string failing;
    for (unsigned m = 1; m <= max_depth; ++m) {
        if (!is_square_free(substitute(zimin(m), c.blocks))) failing += (failing.empty() ? "" : ",") + std::to_string(m);
    }
    r.add("truncated-substitutions-square-free", failing.empty(),
          failing.empty() ? "m <= " + std::to_string(max_depth) : "fails for m = " + failing);

    // Z_{2t-1} x_i ends with (Z_{i-1} x_i)^2, read through the lazy Zimin word.
    const LazyWord z = zimin_lazy(static_cast<unsigned>(2 * t - 1));
    const unsigned sym_depth = static_cast<unsigned>(std::min<std::size_t>(budget.symbolic_depth, 2 * t - 1));
    failing.clear();
    for (unsigned i = 1; i <= sym_depth; ++i) {
        const std::uint64_t half = std::uint64_t{1} << (i - 1);  // |Z_{i-1} x_i|
        const std::uint64_t start = z.total_length() + 1 - 2 * half;
        bool ok = true;
        for (std::uint64_t r2 = 0; r2 < 2 * half && ok; ++r2) {
            const std::uint64_t idx = start + r2;
            const unsigned got = idx < z.total_length() ? z.letter_at(idx) : i;
            const unsigned want = (r2 % half) + 1 == half ? i : zimin_letter(r2 % half + 1);
            ok = got == want;
        }
        if (!ok) failing += (failing.empty() ? "" : ",") + std::to_string(i);
    }
    r.add("symbolic-suffix-squares", failing.empty(),
          failing.empty() ? "i <= " + std::to_string(sym_depth) : "fails for i = " + failing);

    // Same identity at letter level: P with S replaced by A_i ends with a square of length 2^i (t+3).
    failing.clear();
    const std::uint64_t block_len = t + 3;
    const std::uint64_t head = c.P.total_length() - c.S.size();
    for (unsigned i = 1; i <= sym_depth; ++i) {
        const std::uint64_t half = (std::uint64_t{1} << (i - 1)) * block_len;
        const Word& tail_block = c.blocks[i - 1];
        auto letter = [&](std::uint64_t idx) -> Letter {  // index into W A_i
            return idx < head ? c.P.letter_at(idx) : tail_block[static_cast<std::size_t>(idx - head)];
        };
        const std::uint64_t end = head + block_len;
        bool ok = true;
        for (std::uint64_t k = 0; k < half && ok; ++k) ok = letter(end - 2 * half + k) == letter(end - half + k);
        if (!ok) failing += (failing.empty() ? "" : ",") + std::to_string(i);
    }
    r.add("letter-suffix-squares", failing.empty(),
          failing.empty() ? "i <= " + std::to_string(sym_depth) : "fails for i = " + failing);
    return r;
}

MWord m_word() {
    constexpr std::string_view marked = "1_213_123_132_312_321_231_213_123_132_312_321_2";
    MWord m;
    std::vector<Letter> out;
    for (char ch : marked) {
        if (ch == '_') {
            m.marked_positions.push_back(out.size());
        } else {
            out.push_back(static_cast<Letter>(ch - '0'));
        }
    }
    m.word = Word(std::move(out), 3);
    return m;
}

}  // namespace sqfree
