#include "ctmp/preprocess/library_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include "ctmp/errors.hpp"
#include "ctmp/hash.hpp"

namespace ctmp {

namespace {

constexpr char kMagic[8] = {'C', 'T', 'M', 'P', 'L', 'I', 'B', '\0'};

class Writer {
public:
    void bytes(const void* p, std::size_t n) { buf_.append(static_cast<const char*>(p), n); }
    void u8(std::uint8_t v) { buf_.push_back(static_cast<char>(v)); }
    void u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    void u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
    void varint(std::uint64_t v) {
        while (v >= 0x80) {
            u8(static_cast<std::uint8_t>(v | 0x80));
            v >>= 7;
        }
        u8(static_cast<std::uint8_t>(v));
    }
    void str(const std::string& s) {
        u32(static_cast<std::uint32_t>(s.size()));
        bytes(s.data(), s.size());
    }
    /// Sorted ids as count + varint gaps (first gap is from zero).
    void id_list(const std::vector<StateId>& ids) {
        u32(static_cast<std::uint32_t>(ids.size()));
        StateId prev = 0;
        for (StateId id : ids) {
            varint(id - prev);
            prev = id;
        }
    }
    std::string& buffer() { return buf_; }

private:
    std::string buf_;
};

class Reader {
public:
    Reader(const std::string& b, std::size_t end) : buf_(b), end_(end) {}

    void need(std::size_t n) const {
        if (pos_ + n > end_) throw Error(ErrorCode::kCorruptLibrary, "truncated library");
    }
    std::uint8_t u8() {
        need(1);
        return static_cast<std::uint8_t>(buf_[pos_++]);
    }
    std::uint32_t u32() {
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(u8()) << (8 * i);
        return v;
    }
    std::uint64_t u64() {
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(u8()) << (8 * i);
        return v;
    }
    double f64() { return std::bit_cast<double>(u64()); }
    std::uint64_t varint() {
        std::uint64_t v = 0;
        for (int shift = 0; shift < 64; shift += 7) {
            const std::uint8_t b = u8();
            v |= static_cast<std::uint64_t>(b & 0x7f) << shift;
            if (!(b & 0x80)) return v;
        }
        throw Error(ErrorCode::kCorruptLibrary, "malformed varint");
    }
    std::string str() {
        const std::uint32_t n = u32();
        need(n);
        std::string s = buf_.substr(pos_, n);
        pos_ += n;
        return s;
    }
    /// Count fields can't exceed the remaining bytes (each item is >= 1 byte).
    std::uint32_t count() {
        const std::uint32_t n = u32();
        need(n);
        return n;
    }
    std::vector<StateId> id_list(std::size_t lattice_size) {
        const std::uint32_t n = count();
        std::vector<StateId> ids(n);
        std::uint64_t prev = 0;
        for (std::uint32_t i = 0; i < n; ++i) {
            const std::uint64_t gap = varint();
            if (i > 0 && gap == 0) throw Error(ErrorCode::kCorruptLibrary, "id list not strictly increasing");
            prev += gap;
            if (prev >= lattice_size) throw Error(ErrorCode::kCorruptLibrary, "state id off the lattice");
            ids[i] = static_cast<StateId>(prev);
        }
        return ids;
    }
    std::size_t pos() const { return pos_; }

private:
    const std::string& buf_;
    std::size_t end_;
    std::size_t pos_ = 0;
};

void write_config(Writer& w, const Lattice& lat, const Config& q) { w.u32(lat.encode(q)); }

Config read_config(Reader& r, const Lattice& lat) {
    const std::uint32_t id = r.u32();
    if (id >= lat.size()) throw Error(ErrorCode::kCorruptLibrary, "config id off the lattice");
    return lat.decode(id);
}

}  // namespace

std::string serialize_library(const Library& library) {
    const Lattice& lat = library.lattice();
    Writer w;
    w.bytes(kMagic, sizeof kMagic);
    w.u32(kLibraryFormatVersion);
    w.u64(library.fingerprint());
    w.u32(static_cast<std::uint32_t>(lat.dof()));
    for (std::size_t d = 0; d < lat.dof(); ++d) {
        w.u32(static_cast<std::uint32_t>(lat.dims()[d]));
        w.u8(lat.wraps()[d] ? 1 : 0);
    }
    write_config(w, lat, library.home());
    w.u32(static_cast<std::uint32_t>(library.regions().size()));
    for (const RegionCover& region : library.regions()) {
        w.str(region.region_id);
        w.id_list(region.excluded);
        w.u32(static_cast<std::uint32_t>(region.entries.size()));
        for (const CoverEntry& e : region.entries) {
            write_config(w, lat, e.attractor);
            w.u32(static_cast<std::uint32_t>(e.neighborhood.max_descent_steps));
            w.id_list(e.neighborhood.members);
            w.id_list(e.region_members);
            w.u32(static_cast<std::uint32_t>(e.rep_paths.size()));
            for (const Path& p : e.rep_paths) {
                w.u32(static_cast<std::uint32_t>(p.size()));
                for (const Config& q : p.configs) write_config(w, lat, q);
                w.f64(p.cost);
            }
        }
    }
    const std::uint64_t checksum = fnv1a64(w.buffer());
    w.u64(checksum);
    return std::move(w.buffer());
}

Library deserialize_library(const std::string& bytes, const Scenario& scenario) {
    constexpr std::size_t kHeader = sizeof kMagic + 4;
    if (bytes.size() < kHeader + 8 || std::memcmp(bytes.data(), kMagic, sizeof kMagic) != 0) {
        throw Error(ErrorCode::kCorruptLibrary, "not a library file");
    }
    Reader header(bytes, kHeader);
    for (std::size_t i = 0; i < sizeof kMagic; ++i) header.u8();
    const std::uint32_t version = header.u32();
    if (version != kLibraryFormatVersion) {
        throw Error(ErrorCode::kUnsupportedVersion, "library format_version " + std::to_string(version));
    }
    const std::size_t body_end = bytes.size() - 8;
    std::uint64_t stored = 0;
    for (int i = 0; i < 8; ++i) stored |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(bytes[body_end + i])) << (8 * i);
    if (fnv1a64(std::string_view(bytes.data(), body_end)) != stored) {
        throw Error(ErrorCode::kCorruptLibrary, "checksum mismatch");
    }

    Reader r(bytes, body_end);
    for (std::size_t i = 0; i < kHeader; ++i) r.u8();
    const std::uint64_t fp = r.u64();
    if (fp != fingerprint(scenario)) {
        throw Error(ErrorCode::kFingerprintMismatch, "library was built for a different scenario");
    }
    const std::uint32_t dof = r.u32();
    std::vector<int> dims;
    std::vector<bool> wraps;
    for (std::uint32_t d = 0; d < dof && d < 64; ++d) {
        dims.push_back(static_cast<int>(r.u32()));
        wraps.push_back(r.u8() != 0);
    }
    if (dims.size() != dof) throw Error(ErrorCode::kCorruptLibrary, "implausible dof");
    Lattice lat(dims, wraps);
    if (!(lat == make_lattice(scenario))) throw Error(ErrorCode::kCorruptLibrary, "lattice does not match scenario");
    Config home = read_config(r, lat);

    std::vector<RegionCover> regions(r.count());
    for (RegionCover& region : regions) {
        region.region_id = r.str();
        region.excluded = r.id_list(lat.size());
        region.entries.resize(r.count());
        for (CoverEntry& e : region.entries) {
            e.attractor = read_config(r, lat);
            e.neighborhood.attractor = e.attractor;
            e.neighborhood.max_descent_steps = static_cast<int>(r.u32());
            e.neighborhood.members = r.id_list(lat.size());
            e.region_members = r.id_list(lat.size());
            e.rep_paths.resize(r.count());
            for (Path& p : e.rep_paths) {
                const std::uint32_t n = r.count();
                p.configs.reserve(n);
                for (std::uint32_t i = 0; i < n; ++i) p.configs.push_back(read_config(r, lat));
                p.cost = r.f64();
            }
        }
    }
    if (r.pos() != body_end) throw Error(ErrorCode::kCorruptLibrary, "trailing bytes");
    return Library(fp, std::move(lat), std::move(home), std::move(regions));
}

void save_library(const Library& library, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::kIo, "cannot write library " + path.string());
    const std::string bytes = serialize_library(library);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

Library load_library(const std::filesystem::path& path, const Scenario& scenario) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIo, "cannot open library " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return deserialize_library(buf.str(), scenario);
}

}  // namespace ctmp
