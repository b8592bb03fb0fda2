// Copyright 2026 The liebkagome Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "lk/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "lk/error.hpp"
#include "lk/format.hpp"

namespace lk {

std::string point_tag(double jprime, double h) { return format_number(jprime) + "_" + format_number(h); }

std::string magnetization_csv(const SweepResult& result) {
    std::string out = "jprime,h,mean_abs_m,stderr,reads\n";
    for (const auto& p : result.points) {
        out += format_number(p.jprime) + "," + format_number(p.h) + "," + format_number(p.magnetization.mean) + "," +
               format_number(p.magnetization.std_error) + "," + std::to_string(p.magnetization.reads) + "\n";
    }
    return out;
}

std::string encode_pgm(const SqGrid& grid) {
    const int res = grid.resolution;
    std::string out = "P5\n" + std::to_string(res) + " " + std::to_string(res) + "\n65535\n";
    const double max = grid.max();
    out.reserve(out.size() + 2 * grid.intensity.size());
    for (double v : grid.intensity) {
        const long px = max > 0.0 ? std::lround(v / max * 65535.0) : 0;
        const auto word = static_cast<std::uint16_t>(std::clamp<long>(px, 0, 65535));
        out.push_back(static_cast<char>(word >> 8));
        out.push_back(static_cast<char>(word & 0xFF));
    }
    return out;
}

std::string sq_meta(const SqGrid& grid) {
    std::ostringstream out;
    out << "format=pgm16\n"
        << "zone=" << to_string(grid.zone) << '\n'
        << "resolution=" << grid.resolution << '\n'
        << "shear=" << format_number(grid.shear) << '\n'
        << "sites=" << grid.sites << '\n'
        << "reads=" << grid.reads << '\n'
        << "max=" << format_number(grid.max()) << '\n'
        << "u_min=" << format_number(grid.raster(0)) << '\n'
        << "u_step=" << format_number(grid.raster(1) - grid.raster(0)) << '\n'
        << "rows=v_ascending\n";
    return out.str();
}

PgmImage decode_pgm(std::string_view bytes) {
    // Header is three whitespace-separated fields after the magic; no comments.
    std::istringstream in{std::string(bytes)};
    std::string magic;
    int w = 0, h = 0, maxval = 0;
    in >> magic >> w >> h >> maxval;
    if (!in || magic != "P5" || maxval != 65535 || w <= 0 || h <= 0)
        fail(ErrorKind::Io, "pgm: unsupported header");
    in.get();
    const auto offset = static_cast<std::size_t>(in.tellg());
    const auto count = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
    if (bytes.size() != offset + 2 * count) fail(ErrorKind::Io, "pgm: truncated pixel data");
    PgmImage img{w, h, std::vector<std::uint16_t>(count)};
    for (std::size_t k = 0; k < count; ++k) {
        const auto hi = static_cast<unsigned char>(bytes[offset + 2 * k]);
        const auto lo = static_cast<unsigned char>(bytes[offset + 2 * k + 1]);
        img.pixels[k] = static_cast<std::uint16_t>((hi << 8) | lo);
    }
    return img;
}

std::string samples_dump(const SampleSet& samples) {
    const auto& params = samples.params();
    require(params.has_value(), "samples dump: sample set carries no lattice parameters");
    std::string out = "# samples L=" + std::to_string(params->cells) +
                      " boundary=" + std::string(to_string(params->boundary)) + " J=" + format_number(params->J) +
                      " jprime=" + format_number(params->Jprime) + " h=" + format_number(params->h) +
                      " engine=" + samples.engine() + " sites=" + std::to_string(samples.sites()) +
                      " reads=" + std::to_string(samples.size()) + "\n";
    for (const auto& s : samples.samples()) out += s.config.to_string() + "\n";
    return out;
}

LoadedSamples load_samples(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line.rfind("# samples ", 0) != 0)
        fail(ErrorKind::Io, "samples: missing '# samples' header");
    std::map<std::string, std::string> header;
    std::istringstream tokens(line.substr(10));
    std::string tok;
    while (tokens >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) fail(ErrorKind::Io, "samples: malformed header token '" + tok + "'");
        header[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    auto field = [&](const std::string& key) -> const std::string& {
        auto it = header.find(key);
        if (it == header.end()) fail(ErrorKind::Io, "samples: header lacks '" + key + "'");
        return it->second;
    };
    auto number = [&](const std::string& key) {
        auto v = parse_number(field(key));
        if (!v) fail(ErrorKind::Io, "samples: header value for '" + key + "' is not a number");
        return *v;
    };
    const auto boundary = parse_boundary(field("boundary"));
    if (!boundary) fail(ErrorKind::Io, "samples: unknown boundary '" + field("boundary") + "'");

    LoadedSamples out{build_lattice(static_cast<int>(number("L")), *boundary), {}, number("jprime"), number("h")};
    const auto model = SpinModel::from_lattice(out.lattice, number("J"), out.jprime, out.h);
    out.samples = SampleSet(model, field("engine"), "loaded");
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto config = SpinConfig::parse(line);
        if (config.size() != out.lattice.size())
            fail(ErrorKind::Io, "samples: read has " + std::to_string(config.size()) + " spins, lattice has " +
                                    std::to_string(out.lattice.size()));
        out.samples.add(model, std::move(config), 0);
    }
    if (out.samples.empty()) fail(ErrorKind::Io, "samples: no reads");
    return out;
}

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        fail(ErrorKind::Io, "sha256: digest failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int k = 0; k < len; ++k) {
        out.push_back(hex[digest[k] >> 4]);
        out.push_back(hex[digest[k] & 0xF]);
    }
    return out;
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::Io, "cannot open '" + path.string() + "' for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) fail(ErrorKind::Io, "write failed for '" + path.string() + "'");
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Io, "cannot open '" + path.string() + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> write_sq(const std::filesystem::path& dir, const std::string& tag, const SqGrid& grid) {
    const std::string pgm = "sq_" + tag + ".pgm";
    const std::string meta = "sq_" + tag + ".meta";
    write_file(dir / pgm, encode_pgm(grid));
    write_file(dir / meta, sq_meta(grid));
    return {pgm, meta};
}

void write_manifest(const std::filesystem::path& dir, std::vector<std::string> files) {
    std::sort(files.begin(), files.end());
    std::string out;
    for (const auto& f : files) out += sha256_hex(read_file(dir / f)) + "  " + f + "\n";
    write_file(dir / "manifest.txt", out);
}

std::vector<std::string> write_outputs(const SweepResult& result, const RunConfig& config) {
    const auto& dir = config.output_dir;
    ensure_writable(dir);
    std::vector<std::string> files;
    if (config.plan.outputs.magnetization) {
        write_file(dir / "magnetization.csv", magnetization_csv(result));
        files.emplace_back("magnetization.csv");
    }
    for (const auto& p : result.points) {
        const auto tag = point_tag(p.jprime, p.h);
        if (p.sq) {
            auto written = write_sq(dir, tag, *p.sq);
            files.insert(files.end(), written.begin(), written.end());
        }
        if (config.dump_samples && p.samples) {
            const std::string name = "samples_" + tag + ".txt";
            write_file(dir / name, samples_dump(*p.samples));
            files.push_back(name);
        }
    }
    const auto& prov = result.provenance;
    write_file(dir / "provenance.txt", "version=" + prov.version + "\nstarted=" + prov.started +
                                           "\nfinished=" + prov.finished + "\n" + prov.plan);
    files.emplace_back("provenance.txt");
    write_manifest(dir, files);
    std::sort(files.begin(), files.end());
    return files;
}

bool verify_manifest(const std::filesystem::path& dir) {
    std::istringstream in(read_file(dir / "manifest.txt"));
    std::string line;
    while (std::getline(in, line)) {
        const auto sep = line.find("  ");
        if (sep == std::string::npos) return false;
        std::error_code ec;
        const auto path = dir / line.substr(sep + 2);
        if (!std::filesystem::exists(path, ec)) return false;
        if (sha256_hex(read_file(path)) != line.substr(0, sep)) return false;
    }
    return true;
}

} // namespace lk
