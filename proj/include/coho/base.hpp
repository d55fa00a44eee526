#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace coho {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

class InconsistentPresentation : public Error {
public:
    explicit InconsistentPresentation(const std::string& msg) : Error(msg) {}
};

// Raised when a search cannot succeed inside the current truncation; the
// completion driver reacts by extending the resolution.
class TruncationTooLow : public Error {
public:
    explicit TruncationTooLow(const std::string& msg) : Error(msg) {}
};

// Integer extended by -infinity. Used for annihilator top degrees,
// a-invariants and filter degree types.
struct ExtInt {
    bool finite = false;
    long value = 0;

    ExtInt() = default;  // -infinity
    ExtInt(long v) : finite(true), value(v) {}

    static ExtInt neg_inf() { return ExtInt{}; }

    bool operator==(const ExtInt& o) const
    {
        return finite == o.finite && (!finite || value == o.value);
    }
    bool operator!=(const ExtInt& o) const { return !(*this == o); }
    bool operator<(const ExtInt& o) const
    {
        if (!finite)
            return o.finite;
        return o.finite && value < o.value;
    }
    bool operator<=(const ExtInt& o) const { return *this < o || *this == o; }

    // -inf + n = -inf
    ExtInt operator+(long n) const { return finite ? ExtInt(value + n) : ExtInt(); }
    ExtInt operator-(long n) const { return finite ? ExtInt(value - n) : ExtInt(); }

    std::string str() const { return finite ? std::to_string(value) : std::string("ninf"); }
    static ExtInt parse(const std::string& tok)
    {
        if (tok == "ninf" || tok == "-inf")
            return neg_inf();
        return ExtInt(std::stol(tok));
    }
};

inline ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }

}  // namespace coho
