#include "equi/types.hpp"

namespace equi {

namespace {
constexpr std::array<std::string_view, kDeviceCount> kNames = {
    "horse_lf", "horse_rf", "horse_lh", "horse_rh", "rider_head",
    "rider_waist", "rider_arm_l", "rider_arm_r", "rider_leg_l", "rider_leg_r"};
}

std::string_view placement_name(Placement p) { return kNames[device_id(p)]; }

std::optional<Placement> placement_from_name(std::string_view name) {
    for (int i = 0; i < kDeviceCount; ++i)
        if (kNames[i] == name) return static_cast<Placement>(i);
    return std::nullopt;
}

}  // namespace equi
