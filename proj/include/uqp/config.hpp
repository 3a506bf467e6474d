#pragma once

#include <stdexcept>

namespace uqp {

/// Runtime knobs.  Thread-local so that concurrent verifications with
/// different bounds cannot interfere; values are plain data.
struct Config {
    /// Guard against runaway shuffle products (C(a+b,a) terms before
    /// collection).  Raise via WordLenGuard for deep verifications.
    int max_word_length = 14;

    /// Mutation switches for the self-test harness.  pairing_sign flips the
    /// sign of the crossing form; perturbed_rule (0..5 main order, 6..11
    /// appendix order) multiplies that reduction rule's correction
    /// coefficient by q.  Production runs keep the defaults.
    int pairing_sign = 1;
    int perturbed_rule = -1;
};

inline Config& config() {
    thread_local Config cfg;
    return cfg;
}

/// RAII bump of the word-length cap.
class WordLenGuard {
public:
    explicit WordLenGuard(int len) : saved_(config().max_word_length) {
        if (len > config().max_word_length) config().max_word_length = len;
    }
    ~WordLenGuard() { config().max_word_length = saved_; }
    WordLenGuard(const WordLenGuard&) = delete;
    WordLenGuard& operator=(const WordLenGuard&) = delete;

private:
    int saved_;
};

/// RAII mutation scope for the self-test.
class MutationGuard {
public:
    MutationGuard(int pairing_sign, int perturbed_rule) : saved_(config()) {
        config().pairing_sign = pairing_sign;
        config().perturbed_rule = perturbed_rule;
    }
    ~MutationGuard() { config() = saved_; }
    MutationGuard(const MutationGuard&) = delete;
    MutationGuard& operator=(const MutationGuard&) = delete;

private:
    Config saved_;
};

}  // namespace uqp
