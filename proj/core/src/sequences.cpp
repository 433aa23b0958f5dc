#include "tensorwalk/sequences.hpp"

#include "tensorwalk/fixtures.hpp"
#include "tensorwalk/holonomic.hpp"
#include "tensorwalk/transforms.hpp"
#include "tensorwalk/walks.hpp"

#include <map>
#include <stdexcept>

namespace tensorwalk::sequences {

namespace {

Sequence unroll_quadrant(int k, int n_max) {
    // four initial terms from the walk engine, then the uniform recurrence
    const Sequence init = walks::excursions(walks::builtin_config("quadrant_sl3", k), 3);
    return holonomic::unroll(fixtures::paper_recurrence("quadrant_rec", k), init, n_max);
}

const std::map<std::string, std::string>& aliases() {
    static const std::map<std::string, std::string> m = {
        {"A059710", "T3"}, {"A108307", "E3"}, {"A108304", "NC3"}, {"A151366", "S0"},
        {"A236408", "S1"}, {"A001181", "S2"}, {"A216947", "S3"},
    };
    return m;
}

}  // namespace

std::string canonical_sequence_name(const std::string& name) {
    const auto it = aliases().find(name);
    const std::string canon = it == aliases().end() ? name : it->second;
    for (const auto& known : sequence_names())
        if (known == canon) return canon;
    throw std::invalid_argument("unknown sequence: " + name);
}

Sequence named_sequence(const std::string& name, int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    const std::string canon = canonical_sequence_name(name);
    if (canon == "T3") return holonomic::unroll(fixtures::paper_recurrence("t3_rec"), {1, 0, 1}, n_max);
    if (canon == "E3") return holonomic::unroll(fixtures::paper_recurrence("e3_rec"), {1, 1}, n_max);
    if (canon == "NC3") {
        const Sequence e3 = named_sequence("E3", n_max);
        return transforms::bt_power(e3, 1);
    }
    if (canon == "S0") return unroll_quadrant(0, n_max);
    if (canon == "S1") return unroll_quadrant(1, n_max);
    if (canon == "S2") return unroll_quadrant(2, n_max);
    if (canon == "S3") return unroll_quadrant(3, n_max);
    if (canon == "catalan") return fixtures::catalan_prefix(n_max);
    if (canon == "catalan3d") return fixtures::catalan3d_prefix(n_max);
    if (canon == "c2spin") return fixtures::c2_spin_prefix(n_max);
    throw std::invalid_argument("unknown sequence: " + name);
}

std::vector<std::string> sequence_names() {
    return {"T3", "E3", "NC3", "S0", "S1", "S2", "S3", "catalan", "catalan3d", "c2spin"};
}

}  // namespace tensorwalk::sequences
