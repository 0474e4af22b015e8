#ifndef MEMGRID_ERRORS_HPP
#define MEMGRID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace memgrid {

/// Thrown when a simulation observes a state that violates a model guarantee
/// (e.g. non-positive composite resistance). The run must abort, not clamp.
class simulation_integrity_error : public std::runtime_error {
public:
    explicit simulation_integrity_error(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

/// Thrown when a closed-form expression hits a singular branch
/// (log argument exactly zero).
class singular_branch_error : public std::domain_error {
public:
    explicit singular_branch_error(const std::string& what_arg)
        : std::domain_error(what_arg) {}
};

}  // namespace memgrid

#endif  // MEMGRID_ERRORS_HPP
