#include "sqfree/properties.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace sqfree {

Pattern Pattern::parse(std::string_view text) {
    Pattern p;
    if (text.find('.') == std::string_view::npos) {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("malformed pattern '" + std::string(text) + "'");
            p.symbols.push_back(static_cast<unsigned>(c - '0'));
        }
    } else {
        const Word w = parse_word(text, 0xFFFF);
        p.symbols.assign(w.begin(), w.end());
    }
    if (p.symbols.empty()) throw std::invalid_argument("pattern must be nonempty");
    return p;
}

std::string Pattern::to_string() const {
    const bool digits = std::all_of(symbols.begin(), symbols.end(), [](unsigned s) { return s <= 9; });
    std::string out;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (!digits && i) out.push_back('.');
        out += std::to_string(symbols[i]);
    }
    return out;
}

AvoidanceProperty AvoidanceProperty::k_power_free(unsigned k) {
    if (k < 2) throw std::invalid_argument("k-power exponent must be at least 2");
    return AvoidanceProperty(Kind::KPowerFree, k);
}

AvoidanceProperty AvoidanceProperty::pattern_free(Pattern p, RealizationMode mode) {
    if (p.symbols.empty()) throw std::invalid_argument("pattern must be nonempty");
    AvoidanceProperty q(Kind::PatternFree, 0);
    q.pattern_ = std::move(p);
    q.mode_ = mode;
    return q;
}

AvoidanceProperty AvoidanceProperty::parse(std::string_view spec) {
    if (spec == "square") return square_free();
    if (spec == "cube") return k_power_free(3);
    if (spec == "overlap") return overlap_free();
    if (spec == "abelian") return abelian_square_free();
    if (spec.starts_with("power:")) {
        const std::string_view digits = spec.substr(6);
        unsigned k = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
            throw std::invalid_argument("malformed property '" + std::string(spec) + "'");
        }
        return k == 2 ? square_free() : k_power_free(k);
    }
    if (spec.starts_with("pattern:")) {
        std::string_view body = spec.substr(8);
        RealizationMode mode = RealizationMode::Biconditional;
        if (body.ends_with(":relaxed")) {
            body.remove_suffix(8);
            mode = RealizationMode::Relaxed;
        }
        return pattern_free(Pattern::parse(body), mode);
    }
    throw std::invalid_argument("unknown property '" + std::string(spec) + "'");
}

std::string AvoidanceProperty::to_string() const {
    switch (kind_) {
        case Kind::SquareFree: return "square";
        case Kind::KPowerFree: return k_ == 2 ? "square" : k_ == 3 ? "cube" : "power:" + std::to_string(k_);
        case Kind::OverlapFree: return "overlap";
        case Kind::AbelianSquareFree: return "abelian";
        case Kind::PatternFree:
            return "pattern:" + pattern_.to_string() + (mode_ == RealizationMode::Relaxed ? ":relaxed" : "");
    }
    return {};
}

namespace {

/// Longest run of j with w[j] == w[j+p] reaches `need` somewhere in w.
bool has_periodic_run(LetterSpan w, std::size_t p, std::size_t need) {
    std::size_t run = 0;
    for (std::size_t j = 0; j + p < w.size(); ++j) {
        run = w[j] == w[j + p] ? run + 1 : 0;
        if (run >= need) return true;
    }
    return false;
}

/// Some factor of length m with period p covers position q.
bool periodic_through(LetterSpan u, std::size_t q, std::size_t p, std::size_t m) {
    const std::size_t L = u.size();
    if (m > L || q >= L) return false;
    const std::size_t lo = q + 1 >= m ? q + 1 - m : 0;
    const std::size_t hi = std::min(q, L - m);
    if (lo > hi) return false;
    const std::size_t need = m - p;
    std::size_t run = 0;
    for (std::size_t j = lo; j <= hi + need - 1; ++j) {
        run = u[j] == u[j + p] ? run + 1 : 0;
        if (run >= need) return true;
    }
    return false;
}

class ParikhTable {
public:
    ParikhTable(LetterSpan w) : letters_(1) {
        for (Letter l : w) letters_ = std::max<std::size_t>(letters_, l + 1);
        counts_.assign((w.size() + 1) * letters_, 0);
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::copy_n(&counts_[i * letters_], letters_, &counts_[(i + 1) * letters_]);
            ++counts_[(i + 1) * letters_ + w[i]];
        }
    }

    /// Parikh vectors of [i, i+h) and [i+h, i+2h) agree.
    bool abelian_square_at(std::size_t i, std::size_t h) const {
        const std::uint32_t* a = &counts_[i * letters_];
        const std::uint32_t* b = &counts_[(i + h) * letters_];
        const std::uint32_t* c = &counts_[(i + 2 * h) * letters_];
        for (std::size_t l = 1; l < letters_; ++l) {
            if (b[l] - a[l] != c[l] - b[l]) return false;
        }
        return true;
    }

private:
    std::size_t letters_;
    std::vector<std::uint32_t> counts_;
};

class PatternMatcher {
public:
    PatternMatcher(LetterSpan w, const Pattern& p, RealizationMode mode) : w_(w), p_(p.symbols), mode_(mode) {}

    bool run() {
        if (w_.size() < p_.size()) return false;
        return match(0, 0);
    }

private:
    struct Binding {
        unsigned var;
        std::size_t offset;
        std::size_t length;
    };

    const Binding* find(unsigned var) const {
        for (const Binding& b : bound_) {
            if (b.var == var) return &b;
        }
        return nullptr;
    }

    bool equal(std::size_t a, std::size_t b, std::size_t len) const {
        return std::equal(w_.begin() + static_cast<std::ptrdiff_t>(a), w_.begin() + static_cast<std::ptrdiff_t>(a + len),
                          w_.begin() + static_cast<std::ptrdiff_t>(b));
    }

    /// Letters still needed after symbol idx.
    std::size_t min_rest(std::size_t idx) const {
        std::size_t need = 0;
        for (std::size_t k = idx + 1; k < p_.size(); ++k) {
            const Binding* b = find(p_[k]);
            need += b ? b->length : 1;
        }
        return need;
    }

    bool match(std::size_t pos, std::size_t idx) {
        if (idx == p_.size()) return pos == w_.size();
        if (const Binding* b = find(p_[idx])) {
            if (pos + b->length > w_.size() || !equal(b->offset, pos, b->length)) return false;
            return match(pos + b->length, idx + 1);
        }
        const std::size_t rest = min_rest(idx);
        if (pos + rest >= w_.size()) return false;
        const std::size_t max_len = w_.size() - pos - rest;
        for (std::size_t len = 1; len <= max_len; ++len) {
            if (mode_ == RealizationMode::Biconditional) {
                const bool clash = std::any_of(bound_.begin(), bound_.end(), [&](const Binding& b) {
                    return b.length == len && equal(b.offset, pos, len);
                });
                if (clash) continue;
            }
            bound_.push_back({p_[idx], pos, len});
            const bool ok = match(pos + len, idx + 1);
            bound_.pop_back();
            if (ok) return true;
        }
        return false;
    }

    LetterSpan w_;
    const std::vector<unsigned>& p_;
    RealizationMode mode_;
    std::vector<Binding> bound_;
};

}  // namespace

bool contains_k_power(LetterSpan w, unsigned k) {
    if (k < 2) throw std::invalid_argument("k-power exponent must be at least 2");
    if (k == 2) return !is_square_free(w);
    for (std::size_t p = 1; p * k <= w.size(); ++p) {
        if (has_periodic_run(w, p, (k - 1) * p)) return true;
    }
    return false;
}

bool contains_overlap(LetterSpan w) {
    for (std::size_t p = 1; 2 * p + 1 <= w.size(); ++p) {
        if (has_periodic_run(w, p, p + 1)) return true;
    }
    return false;
}

bool contains_abelian_square(LetterSpan w) {
    const ParikhTable t(w);
    for (std::size_t h = 1; 2 * h <= w.size(); ++h) {
        for (std::size_t i = 0; i + 2 * h <= w.size(); ++i) {
            if (t.abelian_square_at(i, h)) return true;
        }
    }
    return false;
}

bool realizes_pattern(LetterSpan w, const Pattern& p, RealizationMode mode) {
    if (p.symbols.empty()) throw std::invalid_argument("pattern must be nonempty");
    return PatternMatcher(w, p, mode).run();
}

bool contains_pattern(LetterSpan w, const Pattern& p, RealizationMode mode) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t len = p.symbols.size(); i + len <= w.size(); ++len) {
            if (realizes_pattern(w.subspan(i, len), p, mode)) return true;
        }
    }
    return false;
}

bool avoids(LetterSpan w, const AvoidanceProperty& q) {
    using K = AvoidanceProperty::Kind;
    switch (q.kind()) {
        case K::SquareFree: return is_square_free(w);
        case K::KPowerFree: return !contains_k_power(w, q.power());
        case K::OverlapFree: return !contains_overlap(w);
        case K::AbelianSquareFree: return !contains_abelian_square(w);
        case K::PatternFree: return !contains_pattern(w, q.pattern(), q.realization());
    }
    return false;
}

bool is_violation(LetterSpan f, const AvoidanceProperty& q) {
    using K = AvoidanceProperty::Kind;
    const std::size_t L = f.size();
    auto has_period = [&](std::size_t p) {
        for (std::size_t j = 0; j + p < L; ++j) {
            if (f[j] != f[j + p]) return false;
        }
        return true;
    };
    switch (q.kind()) {
        case K::SquareFree:
        case K::KPowerFree: {
            const unsigned k = q.kind() == K::SquareFree ? 2 : q.power();
            return L > 0 && L % k == 0 && has_period(L / k);
        }
        case K::OverlapFree: return L >= 3 && L % 2 == 1 && has_period((L - 1) / 2);
        case K::AbelianSquareFree: return L > 0 && L % 2 == 0 && ParikhTable(f).abelian_square_at(0, L / 2);
        case K::PatternFree: return realizes_pattern(f, q.pattern(), q.realization());
    }
    return false;
}

bool violation_through(LetterSpan u, std::size_t pos, const AvoidanceProperty& q) {
    using K = AvoidanceProperty::Kind;
    const std::size_t L = u.size();
    if (pos >= L) return false;
    switch (q.kind()) {
        case K::SquareFree: return has_square_through(u, pos);
        case K::KPowerFree: {
            if (q.power() == 2) return has_square_through(u, pos);
            for (std::size_t p = 1; p * q.power() <= L; ++p) {
                if (periodic_through(u, pos, p, p * q.power())) return true;
            }
            return false;
        }
        case K::OverlapFree:
            for (std::size_t p = 1; 2 * p + 1 <= L; ++p) {
                if (periodic_through(u, pos, p, 2 * p + 1)) return true;
            }
            return false;
        case K::AbelianSquareFree: {
            const ParikhTable t(u);
            for (std::size_t h = 1; 2 * h <= L; ++h) {
                const std::size_t lo = pos + 1 >= 2 * h ? pos + 1 - 2 * h : 0;
                const std::size_t hi = std::min(pos, L - 2 * h);
                for (std::size_t i = lo; i <= hi; ++i) {
                    if (t.abelian_square_at(i, h)) return true;
                }
            }
            return false;
        }
        case K::PatternFree:
            for (std::size_t i = 0; i <= pos; ++i) {
                for (std::size_t end = std::max(pos + 1, i + q.pattern().symbols.size()); end <= L; ++end) {
                    if (realizes_pattern(u.subspan(i, end - i), q.pattern(), q.realization())) return true;
                }
            }
            return false;
    }
    return false;
}

std::optional<FactorRef> find_violation(LetterSpan w, const AvoidanceProperty& q) {
    if (q.is_square_free()) return find_square(w);
    for (std::size_t end = 1; end <= w.size(); ++end) {
        for (std::size_t len = 1; len <= end; ++len) {
            if (is_violation(w.subspan(end - len, len), q)) return FactorRef{end - len, len};
        }
    }
    return std::nullopt;
}

bool insertion_avoids_unchecked(LetterSpan w, std::size_t position, Letter x, const AvoidanceProperty& q) {
    if (q.is_square_free()) return insertion_is_square_free_unchecked(w, position, x);
    thread_local std::vector<Letter> buf;
    buf.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(position));
    buf.push_back(x);
    buf.insert(buf.end(), w.begin() + static_cast<std::ptrdiff_t>(position), w.end());
    return !violation_through(buf, position, q);
}

PotentialReport property_extensions(const Word& w, const AvoidanceProperty& q, unsigned alphabet_size) {
    if (alphabet_size == 0) throw std::invalid_argument("alphabet size must be at least 1");
    for (Letter l : w) {
        if (l > alphabet_size) throw std::invalid_argument("word uses a letter outside the alphabet");
    }
    if (!avoids(w, q)) throw std::invalid_argument("word does not avoid " + q.to_string());
    std::vector<Extension> out;
    for (std::size_t p = 0; p <= w.size(); ++p) {
        for (Letter x = 1; x <= alphabet_size; ++x) {
            if (insertion_avoids_unchecked(w.span(), p, x, q)) out.push_back({p, x});
        }
    }
    return PotentialReport::from_extensions(std::move(out), w.size());
}

}  // namespace sqfree
