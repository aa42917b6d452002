#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "sqfree/potential.hpp"
#include "sqfree/squares.hpp"
#include "sqfree/word.hpp"

using namespace sqfree;

namespace {

const char* const kH = "1231213231232123121323123";

oracle::Letters letters(const Word& w) { return oracle::Letters(w.begin(), w.end()); }

Word to_word(const oracle::Letters& v, unsigned n) { return Word(std::vector<Letter>(v.begin(), v.end()), n); }

/// Random square-free word: depth-first growth with shuffled letter order and backtracking.
Word random_square_free(std::mt19937& rng, unsigned n, std::size_t len) {
    std::vector<Letter> w;
    std::vector<std::vector<Letter>> todo;  // untried letters per depth
    auto shuffled = [&] {
        std::vector<Letter> v(n);
        for (unsigned i = 0; i < n; ++i) v[i] = static_cast<Letter>(i + 1);
        std::shuffle(v.begin(), v.end(), rng);
        return v;
    };
    todo.push_back(shuffled());
    while (w.size() < len) {
        if (todo.back().empty()) {
            todo.pop_back();
            w.pop_back();
            continue;
        }
        const Letter x = todo.back().back();
        todo.back().pop_back();
        if (has_square_suffix_after(w, x)) continue;
        w.push_back(x);
        todo.push_back(shuffled());
    }
    return Word(std::move(w), n);
}

}  // namespace

TEST(Word, ParseDigitsAndDots) {
    EXPECT_EQ(parse_word("121", 3).letters(), (std::vector<Letter>{1, 2, 1}));
    EXPECT_EQ(parse_word("10.2.11", 12).letters(), (std::vector<Letter>{10, 2, 11}));
    EXPECT_EQ(parse_word(kH, 3).size(), 25u);
    EXPECT_TRUE(parse_word("", 3).empty());
    EXPECT_EQ(parse_word("1.2.1", 3).letters(), (std::vector<Letter>{1, 2, 1}));
}

TEST(Word, ParseErrors) {
    EXPECT_THROW(parse_word("124", 3), std::invalid_argument);
    EXPECT_THROW(parse_word("102", 3), std::invalid_argument);
    EXPECT_THROW(parse_word("1a", 3), std::invalid_argument);
    EXPECT_THROW(parse_word("1..2", 12), std::invalid_argument);
    EXPECT_THROW(parse_word("1.13", 12), std::invalid_argument);
    EXPECT_THROW(parse_word("1", 0), std::invalid_argument);
}

TEST(Word, FormatRoundTrip) {
    for (const char* s : {"1", "1213121", kH, "4231213124"}) {
        EXPECT_EQ(format_word(parse_word(s, 4)), s);
    }
    const Word big = parse_word("1.2.13", 13);
    EXPECT_EQ(format_word(big), "1.2.13");
    EXPECT_EQ(format_word(parse_word("121", 3), WordFormat::Dotted), "1.2.1");
    EXPECT_EQ(parse_word(format_word(big), 13), big);
    EXPECT_THROW(format_word(big, WordFormat::Digits), std::invalid_argument);
}

TEST(Word, Operations) {
    const Word w = parse_word("1213", 3);
    EXPECT_EQ(format_word(w.inserted(0, 3)), "31213");
    EXPECT_EQ(format_word(w.inserted(4, 2)), "12132");
    EXPECT_EQ(format_word(w.factor(1, 2)), "21");
    EXPECT_EQ(format_word(w.reversed()), "3121");
    EXPECT_EQ(format_word(w + parse_word("2", 3)), "12132");
    EXPECT_THROW(w.inserted(5, 1), std::out_of_range);
    EXPECT_THROW(w.inserted(1, 4), std::invalid_argument);
    EXPECT_EQ(parse_word_list("1,2,13", 3).size(), 3u);
}

TEST(Squares, Examples) {
    EXPECT_FALSE(is_square_free(Word({1, 1}, 3)));
    EXPECT_TRUE(is_square_free(parse_word("12131231", 3)));
    EXPECT_TRUE(is_square_free(parse_word(kH, 3)));
    EXPECT_FALSE(is_square_free(parse_word("123123", 3)));
    EXPECT_TRUE(is_square_free(Word()));
    EXPECT_TRUE(is_square_free(parse_word("1", 3)));

    const Word w = parse_word("121", 3);
    EXPECT_TRUE(insertion_is_square_free(w, 3, 3));
    EXPECT_FALSE(insertion_is_square_free(w, 3, 1));
    EXPECT_FALSE(insertion_is_square_free(w, 0, 2));
    EXPECT_THROW(insertion_is_square_free(parse_word("11", 3), 0, 2), std::invalid_argument);
}

// Every word of length <= 12 over A_3 and A_4 against the cubic oracle.
TEST(Squares, ExhaustiveOracleAgreement) {
    for (unsigned n : {3u, 4u}) {
        for (std::size_t k = 0; k <= 12; ++k) {
            std::size_t mismatches = 0;
            oracle::for_all_words(n, k, [&](const oracle::Letters& v) {
                const std::vector<Letter> w(v.begin(), v.end());
                if (is_square_free(w) == oracle::has_square(v)) ++mismatches;
            });
            ASSERT_EQ(mismatches, 0u) << "n=" << n << " k=" << k;
        }
    }
}

TEST(Squares, FindSquareReturnsARealSquare) {
    oracle::for_all_words(3, 9, [&](const oracle::Letters& v) {
        const std::vector<Letter> w(v.begin(), v.end());
        const auto f = find_square(w);
        ASSERT_EQ(f.has_value(), oracle::has_square(v));
        if (!f) return;
        ASSERT_EQ(f->length % 2, 0u);
        const std::size_t h = f->length / 2;
        ASSERT_TRUE(oracle::equal_blocks(v, f->offset, f->offset + h, h));
        // no square ends earlier
        ASSERT_TRUE(!oracle::has_square(oracle::Letters(v.begin(), v.begin() + f->offset + f->length - 1)));
    });
}

// Crossing tests: the Z-array path, the scan path and the oracle restricted to factors covering q.
TEST(Squares, CrossingTestsAgree) {
    auto covering = [](const oracle::Letters& u, std::size_t q) {
        for (std::size_t p = 1; 2 * p <= u.size(); ++p) {
            for (std::size_t i = (q + 1 >= 2 * p ? q + 1 - 2 * p : 0); i <= q && i + 2 * p <= u.size(); ++i) {
                if (oracle::equal_blocks(u, i, i + p, p)) return true;
            }
        }
        return false;
    };
    for (unsigned n : {2u, 3u}) {
        for (std::size_t k = 1; k <= 10; ++k) {
            oracle::for_all_words(n, k, [&](const oracle::Letters& v) {
                const std::vector<Letter> u(v.begin(), v.end());
                for (std::size_t q = 0; q < k; ++q) {
                    const bool want = covering(v, q);
                    ASSERT_EQ(has_square_through(u, q), want);
                    ASSERT_EQ(has_square_through_scan(u, q), want);
                }
            });
        }
    }
}

TEST(Squares, InsertionMatchesOracleExhaustive) {
    for (unsigned n : {3u, 4u}) {
        const std::size_t kmax = n == 3 ? 12 : 9;
        for (std::size_t k = 0; k <= kmax; ++k) {
            oracle::for_all_avoiding(n, k, oracle::has_square, [&](const oracle::Letters& v) {
                const std::vector<Letter> w(v.begin(), v.end());
                for (std::size_t p = 0; p <= k; ++p) {
                    for (unsigned x = 1; x <= n; ++x) {
                        ASSERT_EQ(insertion_is_square_free_unchecked(w, p, static_cast<Letter>(x)),
                                  !oracle::has_square(oracle::insert(v, p, x)));
                    }
                }
            });
        }
    }
}

// Long words push the insertion test onto the Z-array path.
TEST(Squares, InsertionOnLongWords) {
    std::mt19937 rng(7);
    for (std::size_t len : {100u, 700u, 2000u}) {
        for (int rep = 0; rep < 3; ++rep) {
            const Word w = random_square_free(rng, 3, len);
            ASSERT_TRUE(is_square_free(w));
            std::uniform_int_distribution<std::size_t> pos(0, len);
            for (int t = 0; t < 60; ++t) {
                const std::size_t p = pos(rng);
                for (Letter x = 1; x <= 3; ++x) {
                    ASSERT_EQ(insertion_is_square_free(w, p, x), is_square_free(w.inserted(p, x)));
                }
            }
            const auto ext = square_free_extensions(w);
            for (const Extension& e : ext) ASSERT_TRUE(oracle::has_square(letters(w.inserted(e.position, e.letter))) == false);
        }
    }
}

TEST(Potential, Examples) {
    const auto ext121 = square_free_extensions(parse_word("121", 3));
    EXPECT_EQ(ext121, (std::vector<Extension>{{0, 3}, {1, 3}, {2, 3}, {3, 3}}));
    const auto ext123 = square_free_extensions(parse_word("123", 3));
    EXPECT_EQ(ext123, (std::vector<Extension>{{0, 2}, {0, 3}, {1, 3}, {2, 1}, {3, 1}, {3, 2}}));

    const PotentialReport h = potential(parse_word(kH, 3));
    EXPECT_EQ(h.AE_value, 0u);
    EXPECT_EQ(h.ae_value, 0u);
    EXPECT_TRUE(h.is_extremal && h.is_almost_extremal && h.is_maximal);

    const PotentialReport r = potential(parse_word("121", 3));
    EXPECT_EQ(r.AE_value, 4u);
    EXPECT_EQ(r.ae_value, 2u);
    EXPECT_FALSE(r.is_extremal || r.is_almost_extremal || r.is_maximal);

    const PotentialReport e = potential(Word(3));
    EXPECT_EQ(e.AE_value, 3u);
    EXPECT_EQ(e.ae_value, 0u);

    EXPECT_THROW(potential(parse_word("11", 3)), std::invalid_argument);
}

// Potential, injectivity and the AE <= ae + 2(n-1) bound over every square-free word up to length 12.
TEST(Potential, ExhaustiveAgainstOracle) {
    for (unsigned n : {3u, 4u}) {
        const std::size_t kmax = n == 3 ? 12 : 8;
        for (std::size_t k = 0; k <= kmax; ++k) {
            oracle::for_all_avoiding(n, k, oracle::has_square, [&](const oracle::Letters& v) {
                const Word w = to_word(v, n);
                const PotentialReport r = potential(w);
                const oracle::Potential o = oracle::square_potential(v, n);
                ASSERT_EQ(r.AE_value, o.AE);
                ASSERT_EQ(r.ae_value, o.ae);
                ASSERT_EQ(r.extensions.size(), o.extensions.size());
                for (std::size_t i = 0; i < o.extensions.size(); ++i) {
                    ASSERT_EQ(r.extensions[i].position, o.extensions[i].first);
                    ASSERT_EQ(r.extensions[i].letter, o.extensions[i].second);
                }
                std::set<std::vector<Letter>> results;
                for (const Extension& e : r.extensions) results.insert(w.inserted(e.position, e.letter).letters());
                ASSERT_EQ(results.size(), r.extensions.size());
                ASSERT_LE(r.ae_value, r.AE_value);
                ASSERT_LE(r.AE_value, r.ae_value + 2 * (n - 1));
                ASSERT_EQ(internal_potential_unchecked(w.span(), n), r.ae_value);
                ASSERT_EQ(full_potential_unchecked(w.span(), n), r.AE_value);
                ASSERT_EQ(has_square_free_extension_unchecked(w.span(), n), r.AE_value > 0);
            });
        }
    }
}

TEST(Potential, BoundOnLongRandomWords) {
    std::mt19937 rng(11);
    for (unsigned n : {3u, 4u, 5u}) {
        for (int rep = 0; rep < 20; ++rep) {
            const PotentialReport r = potential(random_square_free(rng, n, 60 + 20 * rep));
            EXPECT_LE(r.AE_value, r.ae_value + 2 * (n - 1));
        }
    }
}

TEST(Squares, TernaryLengthSevenContainsShortPalindrome) {
    std::size_t words = 0;
    oracle::for_all_avoiding(3, 7, oracle::has_square, [&](const oracle::Letters& v) {
        ++words;
        bool found = false;
        for (std::size_t i = 0; i + 3 <= v.size(); ++i) found = found || (v[i] == v[i + 2] && v[i] != v[i + 1]);
        EXPECT_TRUE(found) << format_word(to_word(v, 3));
    });
    EXPECT_EQ(words, 60u);
}

TEST(Squares, FactorsOfSquareFreeWordsAreSquareFree) {
    std::mt19937 rng(3);
    for (int rep = 0; rep < 10; ++rep) {
        const Word w = random_square_free(rng, 3, 80);
        std::uniform_int_distribution<std::size_t> pick(0, w.size());
        for (int t = 0; t < 50; ++t) {
            std::size_t a = pick(rng), b = pick(rng);
            if (a > b) std::swap(a, b);
            EXPECT_TRUE(is_square_free(w.factor(a, b - a)));
        }
    }
}
