#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>

namespace wellcov {

enum class Status { Yes, No, Unknown };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Yes: return "yes";
        case Status::No: return "no";
        default: return "unknown";
    }
}

/// Three-valued decision result. A Yes carries a witness, a No carries a
/// counterexample, an Unknown carries a reason string.
template <typename W, typename C = std::monostate>
struct Verdict {
    Status status = Status::Unknown;
    std::optional<W> witness;
    std::optional<C> counterexample;
    std::string reason;

    static Verdict yes(W w) {
        Verdict v;
        v.status = Status::Yes;
        v.witness = std::move(w);
        return v;
    }
    static Verdict no(C c = {}) {
        Verdict v;
        v.status = Status::No;
        v.counterexample = std::move(c);
        return v;
    }
    static Verdict unknown(std::string why) {
        Verdict v;
        v.status = Status::Unknown;
        v.reason = std::move(why);
        return v;
    }

    bool is_yes() const { return status == Status::Yes; }
    bool is_no() const { return status == Status::No; }
    bool is_unknown() const { return status == Status::Unknown; }
};

using Unit = std::monostate;

}  // namespace wellcov
