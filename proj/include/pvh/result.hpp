#pragma once

#include <cassert>
#include <optional>
#include <string>
#include <utility>

namespace pvh {

// Codec and protocol error kinds. One flat enum keeps error propagation
// between layers trivial.
enum class Error {
    InvalidHeader,
    Truncated,
    MalformedPathVector,
    UnknownCodec,
    UnknownMessageType,
    Oversize,
    InvalidWeights,
    NotIpv4,
    WrongTag,
    NotDelivered,
    NoPath,
    UnknownNode,
    MissingEdge,
    Unreachable,
    NotFound,
};

const char* error_name(Error e);

// Value-or-error result for codec and routing operations.
template <typename T>
class Result {
public:
    Result(T value) : value_(std::move(value)) {}
    Result(Error err) : error_(err) {}

    bool ok() const { return value_.has_value(); }
    explicit operator bool() const { return ok(); }

    const T& value() const {
        assert(value_);
        return *value_;
    }
    T& value() {
        assert(value_);
        return *value_;
    }
    T&& take() {
        assert(value_);
        return std::move(*value_);
    }
    Error error() const {
        assert(!value_);
        return error_;
    }

private:
    std::optional<T> value_;
    Error error_ = Error::InvalidHeader;
};

} // namespace pvh
