#include "cnoise/npy.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <regex>

#include "cnoise/error.hpp"

namespace cnoise::npy {

static_assert(std::endian::native == std::endian::little, "payload is written as native floats");

namespace {

constexpr char kMagic[] = "\x93NUMPY";
constexpr std::size_t kMagicLen = 6;

std::string shape_tuple(std::span<const std::size_t> shape) {
    std::string s = "(";
    for (std::size_t i = 0; i < shape.size(); ++i) {
        s += std::to_string(shape[i]);
        if (shape.size() == 1 || i + 1 < shape.size()) s += ",";
        if (i + 1 < shape.size()) s += " ";
    }
    return s + ")";
}

// Pulls the value of `key` out of the header dict literal.
std::string dict_value(const std::string& dict, const std::string& key) {
    const std::regex re("'" + key + "'\\s*:\\s*('[^']*'|True|False|\\([^)]*\\))");
    std::smatch m;
    if (!std::regex_search(dict, m, re)) {
        fail(ErrorCode::malformed_header, "header dict lacks key '" + key + "'");
    }
    return m[1].str();
}

std::vector<std::size_t> parse_shape(const std::string& tuple) {
    std::vector<std::size_t> shape;
    const std::string body = tuple.substr(1, tuple.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
        const std::size_t comma = body.find(',', pos);
        std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        if (!item.empty()) {
            if (item.find_first_not_of("0123456789") != std::string::npos) {
                fail(ErrorCode::malformed_header, "bad shape entry '" + item + "'");
            }
            shape.push_back(std::stoull(item));
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return shape;
}

}  // namespace

std::string make_header(std::span<const std::size_t> shape) {
    std::string dict = "{'descr': '<f4', 'fortran_order': False, 'shape': " + shape_tuple(shape) + ", }";
    const std::size_t preamble = kMagicLen + 2 + 2;
    std::size_t total = preamble + dict.size() + 1;
    const std::size_t padded = (total + 63) / 64 * 64;
    dict.append(padded - total, ' ');
    dict.push_back('\n');

    std::string header(kMagic, kMagicLen);
    header.push_back('\x01');
    header.push_back('\x00');
    const auto len = static_cast<std::uint16_t>(dict.size());
    header.push_back(static_cast<char>(len & 0xff));
    header.push_back(static_cast<char>(len >> 8));
    return header + dict;
}

Float32Array read_float32(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::io_failure, "cannot open " + path.string());

    char magic[kMagicLen + 2] = {};
    if (!in.read(magic, sizeof magic) || std::memcmp(magic, kMagic, kMagicLen) != 0) {
        fail(ErrorCode::malformed_header, path.string() + " is not an npy container");
    }
    const int major = static_cast<unsigned char>(magic[kMagicLen]);
    std::size_t header_len = 0;
    if (major == 1) {
        unsigned char b[2];
        if (!in.read(reinterpret_cast<char*>(b), 2)) fail(ErrorCode::malformed_header, "truncated header");
        header_len = b[0] | (std::size_t(b[1]) << 8);
    } else if (major == 2) {
        unsigned char b[4];
        if (!in.read(reinterpret_cast<char*>(b), 4)) fail(ErrorCode::malformed_header, "truncated header");
        header_len = b[0] | (std::size_t(b[1]) << 8) | (std::size_t(b[2]) << 16) | (std::size_t(b[3]) << 24);
    } else {
        fail(ErrorCode::malformed_header, "unsupported npy version " + std::to_string(major));
    }

    std::string dict(header_len, '\0');
    if (!in.read(dict.data(), static_cast<std::streamsize>(header_len))) {
        fail(ErrorCode::malformed_header, "truncated header dict");
    }
    if (dict.find('{') == std::string::npos || dict.find('}') == std::string::npos) {
        fail(ErrorCode::malformed_header, "header is not a dict literal");
    }

    const std::string descr = dict_value(dict, "descr");
    if (descr != "'<f4'") fail(ErrorCode::unsupported_dtype, "dtype " + descr + " is not '<f4'");
    if (dict_value(dict, "fortran_order") != "False") {
        fail(ErrorCode::unsupported_dtype, "fortran-ordered arrays are not supported");
    }
    const std::string tuple = dict_value(dict, "shape");
    if (tuple.front() != '(') fail(ErrorCode::malformed_header, "shape is not a tuple");

    Float32Array arr;
    arr.shape = parse_shape(tuple);
    std::size_t count = 1;
    for (std::size_t d : arr.shape) count *= d;
    arr.values.resize(count);
    if (!in.read(reinterpret_cast<char*>(arr.values.data()), static_cast<std::streamsize>(count * sizeof(float)))) {
        fail(ErrorCode::malformed_header, "payload shorter than shape " + tuple);
    }
    if (in.peek() != std::char_traits<char>::eof()) {
        fail(ErrorCode::malformed_header, "trailing bytes after payload");
    }
    return arr;
}

void write_float32(const std::filesystem::path& path, std::span<const std::size_t> shape,
                   std::span<const float> values) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::io_failure, "cannot open " + path.string() + " for writing");
    const std::string header = make_header(shape);
    out.write(header.data(), static_cast<std::streamsize>(header.size()));
    out.write(reinterpret_cast<const char*>(values.data()), static_cast<std::streamsize>(values.size_bytes()));
    if (!out) fail(ErrorCode::io_failure, "write to " + path.string() + " failed");
}

}  // namespace cnoise::npy
