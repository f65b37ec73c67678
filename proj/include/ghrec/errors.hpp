#ifndef GHREC_ERRORS_HPP
#define GHREC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ghrec {

enum class errc {
    malformed_line,
    vertex_out_of_range,
    duplicate_edge,
    self_loop,
    count_mismatch,
    size_limit,
    not_connected,
    bad_arity,
    duplicate_element_in_label,
    duplicate_label,
    bad_l,
    vertex_mismatch,
    not_chordal,
    separator_too_big,
    not_a_realized_clique,
    immediate_conflict,
    not_a_tree,
    not_cubic,
    not_3sat,
    malformed,
    verification_failed,
    internal_construction_failure,
    generation_timeout,
};

const char* to_string(errc code);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

// Invariant check that stays on in release builds. A failure means the
// implementation produced something the theory says cannot happen.
inline void check_internal(bool condition, const char* what) {
    if (!condition) throw error(errc::internal_construction_failure, what);
}

} // namespace ghrec

#endif
