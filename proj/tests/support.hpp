#pragma once

#include <doctest.h>

#include <random>

#include "unsharp/generators.hpp"
#include "unsharp/order.hpp"

#define CHECK_THROWS_CODE(expr, ec)                                                      \
    do {                                                                                 \
        bool thrown_ = false;                                                            \
        try {                                                                            \
            (void)(expr);                                                                \
        } catch (const unsharp::Error& e_) {                                             \
            thrown_ = true;                                                              \
            CHECK_MESSAGE(e_.code() == (ec), "got " << unsharp::to_string(e_.code())     \
                                                    << ": " << e_.what());              \
        }                                                                                \
        CHECK_MESSAGE(thrown_, "expected " << unsharp::to_string(ec));                   \
    } while (false)

inline unsharp::ElemSet S(const unsharp::MeetSemilattice& s,
                          std::initializer_list<std::string_view> names) {
    return unsharp::elem_set(s, names);
}

// small structure sample used by property tests
inline std::vector<unsharp::MeetSemilattice> sample_structures() {
    std::vector<unsharp::MeetSemilattice> out;
    for (auto f : unsharp::fixture_names())
        out.push_back(unsharp::build(f));
    for (std::size_t n = 1; n <= 5; ++n)
        for (auto& s : unsharp::enumerate_all(n))
            out.push_back(std::move(s));
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        out.push_back(unsharp::random_instance(7 + seed % 5, seed));
    return out;
}
