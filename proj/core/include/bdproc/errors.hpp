#pragma once

#include <stdexcept>
#include <string>

namespace bdproc {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Checked 64-bit natural arithmetic; overflow is reported, never wrapped.
struct arithmetic_error : error {
    explicit arithmetic_error(const std::string& what) : error(what) {}
};

struct empty_step_error : error {
    empty_step_error() : error("step must be non-empty") {}
};

struct undeclared_id_error : error {
    explicit undeclared_id_error(const std::string& id)
        : error("undeclared id: " + id), id(id) {}
    std::string id;
};

struct not_enabled_error : error {
    not_enabled_error(const std::string& what, std::size_t index = 0)
        : error(what), index(index) {}
    std::size_t index;  // position in a firing sequence, 0 for single steps
};

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > UINT64_MAX - b) throw arithmetic_error("multiplicity overflow in addition");
    return a + b;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (b != 0 && a > UINT64_MAX / b) throw arithmetic_error("multiplicity overflow in multiplication");
    return a * b;
}

}  // namespace bdproc
