#ifndef IVHFS_COMMANDS_HPP
#define IVHFS_COMMANDS_HPP

#include <iosfwd>
#include <span>
#include <string>

namespace ivhfs {

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitError = 2;

/// Runs one command line (args excludes the program name). Exit status is
/// 0 for true/valid results, 1 for false/invalid ones and 2 for errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace ivhfs

#endif
