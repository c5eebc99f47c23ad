#include "rgb2point/cloud_io.hpp"

#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

namespace rgb2point {
namespace {

struct PlyProperty {
  std::string name;
  int byte_size = 0;
  bool is_double = false;
  bool is_list = false;
};

struct PlyElement {
  std::string name;
  std::size_t count = 0;
  std::vector<PlyProperty> properties;
};

int ply_type_size(const std::string& t) {
  if (t == "char" || t == "int8" || t == "uchar" || t == "uint8") return 1;
  if (t == "short" || t == "int16" || t == "ushort" || t == "uint16") return 2;
  if (t == "int" || t == "int32" || t == "uint" || t == "uint32" || t == "float" ||
      t == "float32")
    return 4;
  if (t == "double" || t == "float64") return 8;
  return 0;
}

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

PointCloud load_ply(std::ifstream& in, const std::filesystem::path& path) {
  std::string line;
  std::getline(in, line);  // "ply" already sniffed by caller
  bool binary_le = false;
  std::vector<PlyElement> elements;
  bool in_header = true;
  while (in_header && std::getline(in, line)) {
    line = trimmed(line);
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw == "comment" || kw == "obj_info" || kw.empty()) continue;
    if (kw == "format") {
      std::string fmt;
      ls >> fmt;
      if (fmt == "binary_little_endian") binary_le = true;
      else if (fmt != "ascii")
        fail(Errc::io_failure, path.string() + ": unsupported PLY format " + fmt);
    } else if (kw == "element") {
      PlyElement el;
      ls >> el.name >> el.count;
      elements.push_back(el);
    } else if (kw == "property") {
      if (elements.empty())
        fail(Errc::malformed_record, path.string() + ": property before any element");
      PlyProperty prop;
      std::string type;
      ls >> type;
      if (type == "list") {
        std::string count_t, value_t;
        ls >> count_t >> value_t >> prop.name;
        prop.is_list = true;
      } else {
        ls >> prop.name;
        prop.byte_size = ply_type_size(type);
        prop.is_double = (type == "double" || type == "float64");
        if (prop.byte_size == 0)
          fail(Errc::malformed_record, path.string() + ": unknown property type " + type);
      }
      elements.back().properties.push_back(prop);
    } else if (kw == "end_header") {
      in_header = false;
    } else {
      fail(Errc::malformed_record, path.string() + ": unexpected header keyword " + kw);
    }
  }
  if (in_header) fail(Errc::malformed_record, path.string() + ": missing end_header");

  const PlyElement* vertex = nullptr;
  for (const auto& el : elements)
    if (el.name == "vertex") vertex = &el;
  if (!vertex || vertex->count == 0)
    fail(Errc::empty_cloud, path.string() + ": no vertex data");

  int ix = -1, iy = -1, iz = -1;
  for (std::size_t i = 0; i < vertex->properties.size(); ++i) {
    const auto& p = vertex->properties[i];
    if (p.name == "x") ix = static_cast<int>(i);
    if (p.name == "y") iy = static_cast<int>(i);
    if (p.name == "z") iz = static_cast<int>(i);
  }
  if (ix < 0 || iy < 0 || iz < 0)
    fail(Errc::malformed_record, path.string() + ": vertex element lacks x/y/z properties");

  PointCloud cloud;
  cloud.points.resize(static_cast<Eigen::Index>(vertex->count), 3);

  if (!binary_le) {
    for (const auto& el : elements) {
      if (&el != vertex) {
        std::size_t skipped = 0;
        while (skipped < el.count && std::getline(in, line)) ++skipped;
        if (skipped < el.count)
          fail(Errc::malformed_record,
               path.string() + ": element " + el.name + " truncated");
        continue;
      }
      for (std::size_t r = 0; r < el.count; ++r) {
        if (!std::getline(in, line) || trimmed(line).empty())
          fail(Errc::malformed_record, path.string() + ": vertex " + std::to_string(r) +
                                           " missing (header declared " +
                                           std::to_string(el.count) + ")");
        std::istringstream vs(line);
        std::vector<double> values(el.properties.size());
        for (std::size_t c = 0; c < el.properties.size(); ++c) {
          if (!(vs >> values[c]))
            fail(Errc::malformed_record, path.string() + ": vertex " + std::to_string(r) +
                                             ", field " + std::to_string(c) + " unreadable");
        }
        cloud.points(static_cast<Eigen::Index>(r), 0) = values[static_cast<std::size_t>(ix)];
        cloud.points(static_cast<Eigen::Index>(r), 1) = values[static_cast<std::size_t>(iy)];
        cloud.points(static_cast<Eigen::Index>(r), 2) = values[static_cast<std::size_t>(iz)];
      }
    }
  } else {
    for (const auto& el : elements) {
      bool fixed_width = true;
      std::size_t record_bytes = 0;
      for (const auto& p : el.properties) {
        if (p.is_list) fixed_width = false;
        record_bytes += static_cast<std::size_t>(p.byte_size);
      }
      if (&el != vertex) {
        if (!fixed_width) {
          if (el.name == "vertex" || vertex < &el) break;  // vertex already read
          fail(Errc::io_failure,
               path.string() + ": cannot skip list element " + el.name + " before vertices");
        }
        in.seekg(static_cast<std::streamoff>(el.count * record_bytes), std::ios::cur);
        continue;
      }
      if (!fixed_width)
        fail(Errc::io_failure, path.string() + ": list property in vertex element");
      std::vector<char> record(record_bytes);
      for (std::size_t r = 0; r < el.count; ++r) {
        if (!in.read(record.data(), static_cast<std::streamsize>(record_bytes)))
          fail(Errc::malformed_record, path.string() + ": vertex " + std::to_string(r) +
                                           " truncated (header declared " +
                                           std::to_string(el.count) + ")");
        std::size_t offset = 0;
        for (std::size_t c = 0; c < el.properties.size(); ++c) {
          const auto& p = el.properties[c];
          int coord = (static_cast<int>(c) == ix) ? 0 : (static_cast<int>(c) == iy) ? 1
                      : (static_cast<int>(c) == iz) ? 2 : -1;
          if (coord >= 0) {
            double v = 0;
            if (p.is_double) {
              std::memcpy(&v, record.data() + offset, 8);
            } else if (p.byte_size == 4) {
              float f;
              std::memcpy(&f, record.data() + offset, 4);
              v = f;
            } else {
              fail(Errc::malformed_record,
                   path.string() + ": coordinate property must be float or double");
            }
            cloud.points(static_cast<Eigen::Index>(r), coord) = v;
          }
          offset += static_cast<std::size_t>(p.byte_size);
        }
      }
      break;  // faces after the vertices are irrelevant for cloud loading
    }
  }
  return cloud;
}

PointCloud load_xyz(std::ifstream& in, const std::filesystem::path& path) {
  std::vector<Vec3d> pts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trimmed(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream ls(t);
    Vec3d p;
    if (!(ls >> p[0] >> p[1] >> p[2]))
      fail(Errc::malformed_record,
           path.string() + ": line " + std::to_string(lineno) + " is not an x y z triple");
    pts.push_back(p);
  }
  if (pts.empty()) fail(Errc::empty_cloud, path.string() + ": no points");
  PointCloud cloud;
  cloud.points.resize(static_cast<Eigen::Index>(pts.size()), 3);
  for (std::size_t i = 0; i < pts.size(); ++i)
    cloud.points.row(static_cast<Eigen::Index>(i)) = pts[i].transpose();
  return cloud;
}

}  // namespace

PointCloud load_cloud(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) fail(Errc::file_missing, path.string());
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_failure, "cannot open " + path.string());

  char magic[3] = {0, 0, 0};
  in.read(magic, 3);
  in.seekg(0);
  PointCloud cloud = (std::strncmp(magic, "ply", 3) == 0) ? load_ply(in, path)
                                                          : load_xyz(in, path);
  if (!cloud.points.allFinite())
    fail(Errc::malformed_record, path.string() + ": non-finite coordinate");
  cloud.id = path.stem().string();
  return cloud;
}

void save_cloud(const PointCloud& cloud, const std::filesystem::path& path,
                CloudFormat format) {
  validate(cloud, "save_cloud(" + path.string() + ")");
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_failure, "cannot open " + path.string() + " for writing");
  out.precision(9);  // enough digits for exact float32 round-trip
  if (format == CloudFormat::ply_ascii) {
    out << "ply\nformat ascii 1.0\n"
        << "element vertex " << cloud.points.rows() << "\n"
        << "property float x\nproperty float y\nproperty float z\n"
        << "end_header\n";
  }
  for (Eigen::Index i = 0; i < cloud.points.rows(); ++i) {
    out << static_cast<float>(cloud.points(i, 0)) << ' '
        << static_cast<float>(cloud.points(i, 1)) << ' '
        << static_cast<float>(cloud.points(i, 2)) << '\n';
  }
  out.flush();
  if (!out) fail(Errc::io_failure, "write failed for " + path.string());
}

}  // namespace rgb2point
