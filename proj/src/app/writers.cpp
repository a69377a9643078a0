#include "maxsurf/app/writers.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <system_error>

#include "maxsurf/error.hpp"

namespace maxsurf::app {

std::string format_double(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_obj(std::ostream& out, const MeshOutput& mesh) {
  const Grid& g = mesh.grid;
  out << "# maxsurf " << mesh.label << "\n";
  out << "# grid " << g.nu << " x " << g.nv << " over [" << format_double(g.rect.u_min) << ", "
      << format_double(g.rect.u_max) << "] x [" << format_double(g.rect.v_min) << ", "
      << format_double(g.rect.v_max) << "]\n";
  for (const Vec3R& p : mesh.vertices)
    out << "v " << format_double(p.x) << ' ' << format_double(p.y) << ' ' << format_double(p.z)
        << '\n';
  for (int j = 0; j + 1 < g.nv; ++j) {
    for (int i = 0; i + 1 < g.nu; ++i) {
      const int a = j * g.nu + i + 1;
      out << "f " << a << ' ' << a + 1 << ' ' << a + 1 + g.nu << ' ' << a + g.nu << '\n';
    }
  }
}

void write_csv(std::ostream& out, const MeshOutput& mesh) {
  const Grid& g = mesh.grid;
  out << "u,v,x,y,z,spacelike\n";
  for (int k = 0; k < g.size(); ++k) {
    const Vec3R& p = mesh.vertices[k];
    out << format_double(g.u(k % g.nu)) << ',' << format_double(g.v(k / g.nu)) << ','
        << format_double(p.x) << ',' << format_double(p.y) << ',' << format_double(p.z) << ','
        << int(mesh.spacelike[k]) << '\n';
  }
}

void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    body(out);
    out.flush();
    if (!out) throw IoError("error writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into place at '" + path.string() + "'");
  }
}

}  // namespace maxsurf::app
