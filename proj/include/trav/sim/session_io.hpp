#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "trav/sim/frame.hpp"

namespace trav::sim {

// Binary recorded-session format, little-endian:
//   header: magic "TRAVSESS", version u32, H u32, W u32, D u32,
//           frame_count u32
//   frame:  H*W*D float32 features (row-major), H*W mask bytes (0/1),
//           prompt count u32, prompt (u, v) float32 pairs,
//           scene_id int32 (-1 if unknown)
inline constexpr char kSessionMagic[8] = {'T', 'R', 'A', 'V',
                                          'S', 'E', 'S', 'S'};
inline constexpr std::uint32_t kSessionVersion = 1;

enum class SessionErrorKind {
    BadMagic,
    BadVersion,
    BadHeader,
    Truncated,
    ShapeMismatch,
    NonFiniteFeature,
};

class SessionError : public std::runtime_error {
public:
    SessionError(SessionErrorKind kind, int frame_index,
                 const std::string& what)
        : std::runtime_error(what), kind_(kind), frame_index_(frame_index) {}

    SessionErrorKind kind() const { return kind_; }
    /// Failing frame index; -1 for header-level errors.
    int frame_index() const { return frame_index_; }

private:
    SessionErrorKind kind_;
    int frame_index_;
};

struct SessionHeader {
    std::uint32_t version = kSessionVersion;
    int height = 0;
    int width = 0;
    int feature_dim = 0;
    std::uint32_t frame_count = 0;
};

/// Streaming reader; validates incrementally so errors name the exact
/// failing frame.
class SessionReader {
public:
    explicit SessionReader(const std::filesystem::path& path);

    const SessionHeader& header() const { return header_; }

    /// Next frame, or nullopt after the declared frame_count.
    std::optional<Frame> next();

private:
    std::ifstream in_;
    SessionHeader header_;
    std::uint32_t read_ = 0;
};

std::vector<Frame> load_session(const std::filesystem::path& path);

/// One-shot atomic write. All frames must share one shape.
void write_session(const std::filesystem::path& path,
                   std::span<const Frame> frames);

}  // namespace trav::sim
