#include "trav/sim/session_io.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <sstream>

#include "trav/core/io.hpp"

static_assert(std::endian::native == std::endian::little,
              "session format assumes a little-endian host");

namespace trav::sim {

namespace {

constexpr std::uint32_t kMaxDim = 1u << 16;

void read_exact(std::ifstream& in, void* dst, std::size_t n, int frame) {
    in.read(static_cast<char*>(dst), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in.gcount()) != n) {
        throw SessionError(SessionErrorKind::Truncated, frame,
                           "session truncated at frame " +
                               std::to_string(frame));
    }
}

std::uint32_t read_u32(std::ifstream& in, int frame) {
    std::uint32_t v;
    read_exact(in, &v, sizeof v, frame);
    return v;
}

std::int32_t read_i32(std::ifstream& in, int frame) {
    std::int32_t v;
    read_exact(in, &v, sizeof v, frame);
    return v;
}

template <class T>
void append_raw(std::string& out, const T* data, std::size_t count) {
    out.append(reinterpret_cast<const char*>(data), count * sizeof(T));
}

}  // namespace

SessionReader::SessionReader(const std::filesystem::path& path)
    : in_(path, std::ios::binary) {
    if (!in_) {
        throw SessionError(SessionErrorKind::BadHeader, -1,
                           "cannot open " + path.string());
    }
    char magic[8];
    read_exact(in_, magic, sizeof magic, -1);
    if (std::memcmp(magic, kSessionMagic, sizeof magic) != 0)
        throw SessionError(SessionErrorKind::BadMagic, -1,
                           "bad session magic");
    header_.version = read_u32(in_, -1);
    if (header_.version != kSessionVersion)
        throw SessionError(SessionErrorKind::BadVersion, -1,
                           "unsupported session version " +
                               std::to_string(header_.version));
    const std::uint32_t h = read_u32(in_, -1);
    const std::uint32_t w = read_u32(in_, -1);
    const std::uint32_t d = read_u32(in_, -1);
    header_.frame_count = read_u32(in_, -1);
    if (h == 0 || w == 0 || d == 0 || h > kMaxDim || w > kMaxDim ||
        d > kMaxDim) {
        throw SessionError(SessionErrorKind::BadHeader, -1,
                           "implausible session dimensions");
    }
    header_.height = static_cast<int>(h);
    header_.width = static_cast<int>(w);
    header_.feature_dim = static_cast<int>(d);
}

std::optional<Frame> SessionReader::next() {
    if (read_ >= header_.frame_count) {
        // Trailing bytes mean the payload shape disagrees with the header.
        if (in_.peek() != std::ifstream::traits_type::eof()) {
            throw SessionError(SessionErrorKind::ShapeMismatch,
                               static_cast<int>(read_),
                               "trailing bytes after declared frame count");
        }
        return std::nullopt;
    }
    const int idx = static_cast<int>(read_);
    Frame f;
    f.width = header_.width;
    f.height = header_.height;
    f.feature_dim = header_.feature_dim;
    f.index = idx;
    const std::size_t npix = f.pixel_count();
    f.features.resize(npix * header_.feature_dim);
    read_exact(in_, f.features.data(), f.features.size() * sizeof(float), idx);
    for (std::size_t i = 0; i < f.features.size(); ++i) {
        if (!std::isfinite(f.features[i])) {
            throw SessionError(SessionErrorKind::NonFiniteFeature, idx,
                               "non-finite feature in frame " +
                                   std::to_string(idx));
        }
    }
    f.truth_mask.resize(npix);
    read_exact(in_, f.truth_mask.data(), npix, idx);
    for (std::uint8_t m : f.truth_mask) {
        if (m > 1) {
            throw SessionError(
                SessionErrorKind::ShapeMismatch, idx,
                "invalid mask byte in frame " + std::to_string(idx) +
                    " (header/payload shape mismatch?)");
        }
    }
    const std::uint32_t nprompts = read_u32(in_, idx);
    if (nprompts > npix) {
        throw SessionError(
            SessionErrorKind::ShapeMismatch, idx,
            "implausible prompt count in frame " + std::to_string(idx));
    }
    f.prompts.resize(nprompts);
    for (std::uint32_t i = 0; i < nprompts; ++i) {
        float uv[2];
        read_exact(in_, uv, sizeof uv, idx);
        f.prompts[i] = geom::PixelPrompt{uv[0], uv[1],
                                         static_cast<double>(idx)};
    }
    const std::int32_t scene = read_i32(in_, idx);
    if (scene < -1) {
        throw SessionError(SessionErrorKind::ShapeMismatch, idx,
                           "invalid scene id in frame " + std::to_string(idx));
    }
    f.scene_id = scene;
    ++read_;
    return f;
}

std::vector<Frame> load_session(const std::filesystem::path& path) {
    SessionReader reader(path);
    std::vector<Frame> out;
    out.reserve(reader.header().frame_count);
    while (auto f = reader.next()) out.push_back(std::move(*f));
    return out;
}

void write_session(const std::filesystem::path& path,
                   std::span<const Frame> frames) {
    std::string buf;
    buf.append(kSessionMagic, sizeof kSessionMagic);
    const std::uint32_t version = kSessionVersion;
    append_raw(buf, &version, 1);
    const Frame* first = frames.empty() ? nullptr : &frames.front();
    const std::uint32_t h = first ? first->height : 0;
    const std::uint32_t w = first ? first->width : 0;
    const std::uint32_t d = first ? first->feature_dim : 0;
    const std::uint32_t n = static_cast<std::uint32_t>(frames.size());
    append_raw(buf, &h, 1);
    append_raw(buf, &w, 1);
    append_raw(buf, &d, 1);
    append_raw(buf, &n, 1);
    for (const Frame& f : frames) {
        if (static_cast<std::uint32_t>(f.height) != h ||
            static_cast<std::uint32_t>(f.width) != w ||
            static_cast<std::uint32_t>(f.feature_dim) != d) {
            throw std::invalid_argument(
                "frames in one session must share a shape");
        }
        append_raw(buf, f.features.data(), f.features.size());
        append_raw(buf, f.truth_mask.data(), f.truth_mask.size());
        const std::uint32_t np = static_cast<std::uint32_t>(f.prompts.size());
        append_raw(buf, &np, 1);
        for (const auto& p : f.prompts) {
            const float uv[2] = {static_cast<float>(p.u),
                                 static_cast<float>(p.v)};
            append_raw(buf, uv, 2);
        }
        const std::int32_t scene = f.scene_id;
        append_raw(buf, &scene, 1);
    }
    core::atomic_write(path, buf);
}

}  // namespace trav::sim
