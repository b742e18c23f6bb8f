#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gmld {

// Error kinds map 1:1 onto C API / CLI exit codes.
enum class ErrKind { input, resource, disagreement, internal };

class Error : public std::runtime_error {
public:
    Error(ErrKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    ErrKind kind;
};

[[noreturn]] inline void input_error(const std::string& msg) { throw Error(ErrKind::input, msg); }
[[noreturn]] inline void resource_error(const std::string& msg) { throw Error(ErrKind::resource, msg); }

// Reduction-step budget shared by all Groebner work inside one command.
struct Budget {
    long long left;
    explicit Budget(long long steps = 10'000'000) : left(steps) {}
    void charge(long long n = 1) {
        left -= n;
        if (left < 0) resource_error("step budget exhausted");
    }
};

// splitmix64: stable across platforms, unlike <random> distributions.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return next() % n; }
};

inline uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(uint64_t v);

}  // namespace gmld
