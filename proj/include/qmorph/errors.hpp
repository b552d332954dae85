#pragma once

#include <stdexcept>
#include <string>

namespace qmorph {

struct LayoutMismatch : std::runtime_error {
    explicit LayoutMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

// Two distinct ensemble states collapsed onto the same bitstring. Only a
// Reset can cause this; in the segmentation pipelines it indicates a bug,
// since position registers are never reset.
struct BranchCollision : std::runtime_error {
    explicit BranchCollision(const std::string& msg) : std::runtime_error(msg) {}
};

// A Reset hit a qubit that is not classically determined: both values of the
// target bit carry nonzero amplitude.
struct ResetCollision : std::runtime_error {
    explicit ResetCollision(const std::string& msg) : std::runtime_error(msg) {}
};

struct WidthCapExceeded : std::runtime_error {
    explicit WidthCapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// decode_register found two states sharing a position but disagreeing on the
// decoded register value.
struct AmbiguousRegister : std::runtime_error {
    explicit AmbiguousRegister(const std::string& msg) : std::runtime_error(msg) {}
};

struct MalformedPgm : std::runtime_error {
    explicit MalformedPgm(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonPowerOfTwoSide : std::runtime_error {
    explicit NonPowerOfTwoSide(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnsupportedMaxval : std::runtime_error {
    explicit UnsupportedMaxval(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct QasmParseError : std::runtime_error {
    explicit QasmParseError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace qmorph
