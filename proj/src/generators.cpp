#include "unsharp/generators.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <random>

namespace unsharp {

namespace {

using Covers = std::vector<Poset::Cover>;

std::vector<std::string> split_names(std::string_view names) {
    std::vector<std::string> out;
    for (char c : names)
        out.emplace_back(1, c);
    return out;
}

MeetSemilattice fig1() {
    return build_semilattice(split_names("0abc"), {{"0", "a"}, {"0", "b"}, {"0", "c"}});
}

MeetSemilattice fig2() {
    const Covers covers{
        {"0", "a"}, {"0", "b"}, {"0", "c"}, {"0", "d"},
        {"a", "e"}, {"b", "e"}, {"c", "e"},
        {"a", "f"}, {"d", "f"},
        {"b", "g"}, {"d", "g"},
        {"c", "h"}, {"d", "h"},
        {"e", "1"}, {"f", "1"}, {"g", "1"}, {"h", "1"},
    };
    return build_semilattice(split_names("0abcdefgh1"), covers);
}

MeetSemilattice fig3() {
    const Covers covers{
        {"0", "a"}, {"0", "b"}, {"0", "c"},
        {"a", "d"}, {"a", "e"}, {"b", "e"}, {"c", "e"},
        {"d", "f"}, {"e", "g"},
        {"f", "1"}, {"g", "1"},
    };
    return build_semilattice(split_names("0abcdefg1"), covers);
}

MeetSemilattice fig4() {
    const Covers covers{
        {"0", "a"}, {"0", "b"}, {"0", "c"},
        {"a", "d"}, {"b", "d"}, {"c", "d"}, {"c", "e"}, {"c", "f"},
        {"d", "1"}, {"e", "1"}, {"f", "1"},
    };
    return build_semilattice(split_names("0abcdef1"), covers);
}

// 0 < a, b < m < 1: the atoms' join sits strictly below the added top.
MeetSemilattice remark5() {
    return build_semilattice({"0", "a", "b", "m", "1"},
                             {{"0", "a"}, {"0", "b"}, {"a", "m"}, {"b", "m"}, {"m", "1"}});
}

MeetSemilattice chain(std::size_t n) {
    std::vector<std::string> names;
    names.emplace_back("0");
    for (std::size_t i = 1; i + 1 < n; ++i)
        names.push_back("c" + std::to_string(i));
    if (n >= 2)
        names.emplace_back("1");
    Covers covers;
    for (std::size_t i = 0; i + 1 < names.size(); ++i)
        covers.emplace_back(names[i], names[i + 1]);
    return build_semilattice(std::move(names), covers);
}

MeetSemilattice mn(std::size_t n) {
    std::vector<std::string> names{"0"};
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i))
                                : "a" + std::to_string(i + 1));
    names.emplace_back("1");
    Covers covers;
    for (std::size_t i = 1; i <= n; ++i) {
        covers.emplace_back("0", names[i]);
        covers.emplace_back(names[i], "1");
    }
    return build_semilattice(std::move(names), covers);
}

MeetSemilattice renamed(const MeetSemilattice& s, std::vector<std::string> names) {
    const std::size_t n = s.size();
    std::vector<std::uint8_t> leq(n * n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            leq[i * n + j] = s.leq(i, j);
    return to_meet_semilattice(Poset::from_relation(std::move(names), std::move(leq)));
}

MeetSemilattice boolean(std::size_t k) {
    if (k == 0)
        return chain(1);
    std::vector<MeetSemilattice> factors(k, chain(2));
    MeetSemilattice p = product(factors);
    std::vector<std::string> names;
    for (const auto& name : p.names()) {
        std::string bits;
        for (char c : name)
            if (c != '.')
                bits += c;
        names.push_back(std::move(bits));
    }
    return renamed(p, std::move(names));
}

[[noreturn]] void bad_spec(std::string_view text, const std::string& why) {
    throw Error(ErrorCode::InvalidSpec, "invalid structure spec '" + std::string(text) + "': " + why);
}

std::size_t parse_count(std::string_view full, std::string_view digits) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
        bad_spec(full, "expected a number");
    return value;
}

std::string_view strip_parens(std::string_view s) {
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        int depth = 0;
        bool wraps = true;
        for (std::size_t i = 0; i < s.size(); ++i) {
            depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
            if (depth == 0 && i + 1 < s.size()) {
                wraps = false;
                break;
            }
        }
        if (!wraps)
            break;
        s = s.substr(1, s.size() - 2);
    }
    return s;
}

constexpr std::array<std::string_view, 4> fixtures{"fig1", "fig2", "fig3", "fig4"};

} // namespace

std::span<const std::string_view> fixture_names() { return fixtures; }

StructureSpec StructureSpec::parse(std::string_view text) {
    const std::string_view body = strip_parens(text);
    StructureSpec spec;
    if (std::find(fixtures.begin(), fixtures.end(), body) != fixtures.end()) {
        spec.kind = Kind::Fixture;
        spec.fixture = std::string(body);
        return spec;
    }
    if (body == "remark5") {
        spec.kind = Kind::Remark5;
        return spec;
    }
    const auto colon = body.find(':');
    if (colon == std::string_view::npos)
        bad_spec(text, "unknown structure");
    const std::string_view head = body.substr(0, colon);
    const std::string_view rest = body.substr(colon + 1);
    if (head == "chain" || head == "bool" || head == "mn") {
        spec.n = parse_count(text, rest);
        if (head == "chain") {
            spec.kind = Kind::Chain;
            if (spec.n < 1)
                bad_spec(text, "chain needs at least one element");
        } else if (head == "bool") {
            spec.kind = Kind::Boolean;
            if (spec.n > 10)
                bad_spec(text, "bool:K is limited to K <= 10");
        } else {
            spec.kind = Kind::Mn;
            if (spec.n < 1)
                bad_spec(text, "mn needs at least one atom");
        }
        return spec;
    }
    if (head == "prod") {
        spec.kind = Kind::Product;
        int depth = 0;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= rest.size(); ++i) {
            if (i < rest.size() && rest[i] == '(')
                ++depth;
            else if (i < rest.size() && rest[i] == ')')
                --depth;
            else if (i == rest.size() || (rest[i] == '+' && depth == 0)) {
                spec.factors.push_back(parse(rest.substr(start, i - start)));
                start = i + 1;
            }
            if (depth < 0)
                bad_spec(text, "unbalanced parentheses");
        }
        if (depth != 0)
            bad_spec(text, "unbalanced parentheses");
        if (spec.factors.size() < 2)
            bad_spec(text, "a product needs at least two factors");
        return spec;
    }
    bad_spec(text, "unknown structure");
}

std::string StructureSpec::to_string() const {
    switch (kind) {
    case Kind::Fixture: return fixture;
    case Kind::Remark5: return "remark5";
    case Kind::Chain: return "chain:" + std::to_string(n);
    case Kind::Boolean: return "bool:" + std::to_string(n);
    case Kind::Mn: return "mn:" + std::to_string(n);
    case Kind::Product: {
        std::string out = "prod:";
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i)
                out += '+';
            const bool nested = factors[i].kind == Kind::Product;
            out += nested ? "(" + factors[i].to_string() + ")" : factors[i].to_string();
        }
        return out;
    }
    }
    return {};
}

MeetSemilattice build(const StructureSpec& spec) {
    MeetSemilattice s = [&] {
        switch (spec.kind) {
        case StructureSpec::Kind::Fixture:
            if (spec.fixture == "fig1") return fig1();
            if (spec.fixture == "fig2") return fig2();
            if (spec.fixture == "fig3") return fig3();
            if (spec.fixture == "fig4") return fig4();
            bad_spec(spec.fixture, "unknown fixture");
        case StructureSpec::Kind::Remark5: return remark5();
        case StructureSpec::Kind::Chain:
            if (spec.n < 1)
                bad_spec(spec.to_string(), "chain needs at least one element");
            return chain(spec.n);
        case StructureSpec::Kind::Boolean: return boolean(spec.n);
        case StructureSpec::Kind::Mn:
            if (spec.n < 1)
                bad_spec(spec.to_string(), "mn needs at least one atom");
            return mn(spec.n);
        case StructureSpec::Kind::Product: {
            if (spec.factors.size() < 2)
                bad_spec(spec.to_string(), "a product needs at least two factors");
            std::vector<MeetSemilattice> parts;
            for (const auto& f : spec.factors)
                parts.push_back(build(f));
            return product(parts);
        }
        }
        bad_spec(spec.to_string(), "unknown kind");
    }();
    s.set_label(spec.to_string());
    return s;
}

MeetSemilattice build(std::string_view spec) {
    return build(StructureSpec::parse(spec));
}

MeetSemilattice product(std::span<const MeetSemilattice> factors) {
    if (factors.empty())
        throw Error(ErrorCode::InvalidSpec, "empty product");
    std::size_t total = 1;
    for (const auto& f : factors) {
        total *= f.size();
        if (total > 4096)
            throw Error(ErrorCode::TooLarge, "product exceeds 4096 elements");
    }

    // Tuple k has component (k / stride[i]) % size[i] in factor i; first factor is major.
    std::vector<std::size_t> stride(factors.size());
    std::size_t acc = 1;
    for (std::size_t i = factors.size(); i-- > 0;) {
        stride[i] = acc;
        acc *= factors[i].size();
    }
    auto component = [&](std::size_t k, std::size_t i) {
        return static_cast<Index>((k / stride[i]) % factors[i].size());
    };

    std::vector<std::string> names(total);
    for (std::size_t k = 0; k < total; ++k) {
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const std::string& part = factors[i].name(component(k, i));
            if (i)
                names[k] += '.';
            names[k] += part.find('.') == std::string::npos ? part : "(" + part + ")";
        }
    }
    std::vector<std::uint8_t> leq(total * total);
    for (std::size_t a = 0; a < total; ++a)
        for (std::size_t b = 0; b < total; ++b) {
            bool le = true;
            for (std::size_t i = 0; i < factors.size() && le; ++i)
                le = factors[i].leq(component(a, i), component(b, i));
            leq[a * total + b] = le;
        }
    return to_meet_semilattice(Poset::from_relation(std::move(names), std::move(leq)));
}

SemilatticeEnumerator::SemilatticeEnumerator(std::size_t n) : n_(n) {
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "enumeration size must be at least 1");
    if (n > max_enumeration_size)
        throw Error(ErrorCode::TooLarge, "enumeration is limited to 6 elements");
    for (Index i = 1; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            pairs_.emplace_back(i, j);
    limit_ = std::uint64_t{1} << pairs_.size();
}

std::optional<MeetSemilattice> SemilatticeEnumerator::next() {
    const std::size_t n = n_;
    while (mask_ < limit_) {
        const std::uint64_t mask = mask_++;
        std::vector<std::uint8_t> leq(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            leq[i * n + i] = 1;
            leq[i] = 1;  // bottom below everything
        }
        for (std::size_t k = 0; k < pairs_.size(); ++k)
            if (mask & (std::uint64_t{1} << k))
                leq[pairs_[k].first * n + pairs_[k].second] = 1;

        // Only transitively closed masks, so each order appears exactly once.
        bool closed = true;
        for (std::size_t i = 1; i < n && closed; ++i)
            for (std::size_t j = 1; j < n && closed; ++j)
                if (leq[i * n + j])
                    for (std::size_t k = 1; k < n; ++k)
                        if (leq[j * n + k] && !leq[i * n + k]) {
                            closed = false;
                            break;
                        }
        if (!closed)
            continue;

        std::vector<std::string> names{"0"};
        for (std::size_t i = 1; i < n; ++i)
            names.emplace_back(1, static_cast<char>('a' + i - 1));
        try {
            MeetSemilattice s =
                to_meet_semilattice(Poset::from_relation(std::move(names), std::move(leq)));
            s.set_label("enum" + std::to_string(n) + "#" + std::to_string(produced_++));
            return s;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NoMeet)
                throw;
        }
    }
    return std::nullopt;
}

std::vector<MeetSemilattice> enumerate_all(std::size_t n) {
    SemilatticeEnumerator e(n);
    std::vector<MeetSemilattice> out;
    while (auto s = e.next())
        out.push_back(std::move(*s));
    return out;
}

MeetSemilattice random_instance(std::size_t n, std::uint64_t seed) {
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "random instance needs at least one element");
    if (n > 256)
        throw Error(ErrorCode::TooLarge, "random instances are limited to 256 elements");
    std::mt19937_64 rng(seed);
    constexpr int retry_cap = 10000;
    for (int attempt = 0; attempt < retry_cap; ++attempt) {
        const bool with_top = n >= 3 && std::bernoulli_distribution(0.5)(rng);
        const std::size_t free = n - 1 - (with_top ? 1 : 0);
        const std::size_t first = 1;
        const std::size_t top = n - 1;

        std::vector<std::size_t> order(free);
        std::iota(order.begin(), order.end(), first);
        std::shuffle(order.begin(), order.end(), rng);
        const double p = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
        std::bernoulli_distribution edge(p);

        std::vector<std::uint8_t> leq(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            leq[i * n + i] = 1;
            leq[i] = 1;
            if (with_top)
                leq[i * n + top] = 1;
        }
        for (std::size_t a = 0; a < free; ++a)
            for (std::size_t b = a + 1; b < free; ++b)
                if (edge(rng))
                    leq[order[a] * n + order[b]] = 1;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (leq[i * n + k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (leq[k * n + j])
                            leq[i * n + j] = 1;

        std::vector<std::string> names{"0"};
        for (std::size_t i = 0; i < free; ++i)
            names.push_back("x" + std::to_string(i + 1));
        if (with_top)
            names.emplace_back("1");
        try {
            MeetSemilattice s =
                to_meet_semilattice(Poset::from_relation(std::move(names), std::move(leq)));
            s.set_label("random(" + std::to_string(n) + "," + std::to_string(seed) + ")");
            return s;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NoMeet)
                throw;
        }
    }
    throw Error(ErrorCode::RetriesExhausted, "no meet-semilattice found within the retry cap");
}

} // namespace unsharp
