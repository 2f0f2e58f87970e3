#include "skl/sing_io.hpp"

#include <json.hpp>
#include <stdexcept>

namespace skl::sing_io {

using json = nlohmann::json;
using leafdim::cplx;

leafdim::SingularityData parse_singularity_data(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("singularity data: invalid JSON: ") + e.what());
  }
  try {
    const auto& jg = j.at("group");
    const std::string fam = jg.at("family").get<std::string>();
    if (fam.size() != 1) throw std::invalid_argument("family must be a single letter");
    rootsys::CartanType t{rootsys::family_from_char(fam[0]), jg.at("rank").get<int>()};
    auto rs = rootsys::build_root_system(t);
    auto model = leafdim::lattice_model_from_string(jg.at("lattice").get<std::string>());
    int center = jg.value("center_dim", -1);
    auto group = leafdim::make_group(std::move(rs), model, center);

    const auto& jtau = j.at("tau");
    cplx tau(jtau.at(0).get<double>(), jtau.at(1).get<double>());
    ellfun::EllipticContext ctx(tau);

    std::vector<leafdim::SingularityDatum> points;
    for (const auto& jp : j.at("points")) {
      leafdim::SingularityDatum d;
      if (jp.contains("z")) {
        d.point = cplx(jp.at("z").at(0).get<double>(), jp.at("z").at(1).get<double>());
      } else if (jp.contains("lattice")) {
        d.point = ellfun::from_lattice_coords(ctx, jp.at("lattice").at(0).get<double>(),
                                              jp.at("lattice").at(1).get<double>());
      } else {
        throw std::invalid_argument("point needs a 'z' or 'lattice' entry");
      }
      const auto& jc = jp.at("coweight");
      const std::string basis_name = jc.at("basis").get<std::string>();
      rootsys::Basis basis;
      if (basis_name == "ambient")
        basis = rootsys::Basis::Ambient;
      else if (basis_name == "fundamental_weight")
        basis = rootsys::Basis::FundamentalWeight;
      else if (basis_name == "fundamental_coweight")
        basis = rootsys::Basis::FundamentalCoweight;
      else
        throw std::invalid_argument("unknown coweight basis '" + basis_name + "'");
      RatVec coords;
      for (const auto& c : jc.at("coords")) {
        if (c.is_string())
          coords.push_back(rat_parse(c.get<std::string>()));
        else
          coords.push_back(Rat(c.get<long long>()));
      }
      d.coweight = group.rs.to_ambient({coords, basis});
      points.push_back(std::move(d));
    }
    return leafdim::make_singularity_data(std::move(group), tau, points);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("singularity data: ") + e.what());
  }
}

std::string write_singularity_data(const leafdim::SingularityData& sd, bool pretty) {
  json j;
  j["schema"] = 1;
  j["group"] = {{"family", std::string(1, rootsys::family_char(sd.group.rs.type.family))},
                {"rank", sd.group.rs.type.rank},
                {"lattice", leafdim::lattice_model_name(sd.group.model)},
                {"center_dim", sd.group.center_dim}};
  j["tau"] = {sd.tau.real(), sd.tau.imag()};
  ellfun::EllipticContext ctx(sd.tau);
  j["points"] = json::array();
  for (const auto& d : sd.points) {
    auto [a, b] = ellfun::lattice_coords(ctx, d.point);
    json coords = json::array();
    for (const auto& c : d.coweight) coords.push_back(rat_str(c));
    j["points"].push_back(
        {{"lattice", {a, b}}, {"coweight", {{"basis", "ambient"}, {"coords", coords}}}});
  }
  return pretty ? j.dump(2) : j.dump();
}

} // namespace skl::sing_io
