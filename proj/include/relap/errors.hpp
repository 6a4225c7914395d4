/**
 * Error types used across the library.
 *
 * Four failure categories, mapped by the CLI onto process exit codes:
 *   - std::invalid_argument : malformed input (files, facet lists, sizes)  -> exit 1
 *   - std::domain_error     : structurally valid input outside an
 *                             operation's domain (bad k, not a subcomplex,
 *                             not pure, not flag, ...)                     -> exit 1
 *   - invariant_violation   : an internal mathematical identity failed
 *                             (dual-route mismatch, theorem violated)      -> exit 2
 *   - resource_limit        : an enumeration exceeded its budget           -> exit 1
 */

#pragma once

#include <stdexcept>
#include <string>

namespace relap {

/** Thrown when two independently computed routes to the same quantity disagree,
 *  or when a proved identity fails on concrete data. Never expected to fire. */
class invariant_violation : public std::logic_error {
public:
    explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

/** Thrown when a combinatorial enumeration would exceed its candidate budget. */
class resource_limit : public std::runtime_error {
public:
    explicit resource_limit(const std::string& what) : std::runtime_error(what) {}
};

} // namespace relap
