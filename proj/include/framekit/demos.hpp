#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "framekit/fusion.hpp"

namespace framekit {

/// Result of one randomized property run. `max_slack` is the largest
/// violation margin observed (negative or tiny positive values mean the
/// property held with room to spare); `checks` counts individual
/// assertions across all instances. Given the same id/seed/dim/field the
/// report is bit-for-bit reproducible.
struct DemoReport {
    std::string id;
    std::uint64_t seed = 0;
    std::size_t dim = 0;
    Field field = Field::Complex;
    int instances = 0;
    long checks = 0;
    double max_slack = 0.0;
    bool pass = false;
};

/// Registered property ids, in registry order.
const std::vector<std::string>& demo_ids();
bool is_demo_id(const std::string& id);

/// Runs the property behind `id` on freshly generated instances with
/// ambient dimensions in [2, dim]. instances = 0 picks the id's default
/// count. Throws UnknownTheorem for unregistered ids.
DemoReport run_demo(const std::string& id, std::uint64_t seed, std::size_t dim, Field field,
                    const Tolerances& tol = {}, int instances = 0);

/// Fixed-format rendering used by the CLI (one key per line).
std::string render_demo_report(const DemoReport& report);

} // namespace framekit
