#pragma once

// Process exit discipline shared by every subcommand.
namespace blowup::cli {

inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 2;
inline constexpr int kInconclusive = 3;
inline constexpr int kVerificationFailure = 4;

}  // namespace blowup::cli
