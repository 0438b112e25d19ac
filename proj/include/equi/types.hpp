#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "equi/geometry.hpp"

namespace equi {

// Fixed device table: ids 0-3 are the horse limbs, 4-9 the rider.
enum class Placement : std::uint8_t {
    horse_lf = 0,
    horse_rf = 1,
    horse_lh = 2,
    horse_rh = 3,
    rider_head = 4,
    rider_waist = 5,
    rider_arm_l = 6,
    rider_arm_r = 7,
    rider_leg_l = 8,
    rider_leg_r = 9,
};

constexpr int kDeviceCount = 10;
constexpr std::array<Placement, 4> kHorseLimbs = {
    Placement::horse_lf, Placement::horse_rf, Placement::horse_lh, Placement::horse_rh};
constexpr std::array<Placement, 5> kRiderLimbs = {
    Placement::rider_head, Placement::rider_arm_l, Placement::rider_arm_r,
    Placement::rider_leg_l, Placement::rider_leg_r};

constexpr int device_id(Placement p) { return static_cast<int>(p); }

inline Placement placement_from_id(int id) {
    if (id < 0 || id >= kDeviceCount)
        throw std::out_of_range("placement_from_id: device id out of range");
    return static_cast<Placement>(id);
}

inline bool is_horse_limb(Placement p) { return device_id(p) < 4; }

std::string_view placement_name(Placement p);
std::optional<Placement> placement_from_name(std::string_view name);

// Raw-to-physical scaling. Full scale +/-16 g and +/-2000 dps over int16.
constexpr double kAccelLsbG = 16.0 / 32768.0;
constexpr double kGyroLsbDps = 2000.0 / 32768.0;
constexpr double kSampleRateHz = 130.0;

struct RawSample {
    std::uint8_t device_id = 0;
    std::uint64_t t_device_us = 0;
    std::array<std::int16_t, 3> accel_raw{};
    std::array<std::int16_t, 3> gyro_raw{};
};

// One scaled 6-axis reading on the unified host clock. Accel in g, gyro in dps.
struct CalibratedSample {
    int device_id = 0;
    double t_s = 0.0;
    Vec3 accel;
    Vec3 gyro;
};

inline Vec3 scale_accel(const std::array<std::int16_t, 3>& raw) {
    return {raw[0] * kAccelLsbG, raw[1] * kAccelLsbG, raw[2] * kAccelLsbG};
}

inline Vec3 scale_gyro(const std::array<std::int16_t, 3>& raw) {
    return {raw[0] * kGyroLsbDps, raw[1] * kGyroLsbDps, raw[2] * kGyroLsbDps};
}

inline std::int16_t quantize(double value, double lsb) {
    double counts = value / lsb;
    if (counts >= 32767.0) return 32767;
    if (counts <= -32768.0) return -32768;
    return static_cast<std::int16_t>(std::lround(counts));
}

}  // namespace equi
