#include "sl2dist/serialize.hpp"

#include <json.hpp>

namespace sl2dist {

using nlohmann::json;

namespace {

json ring_json(const RingDescriptor& d) {
  json j;
  j["ring"] = d.kind;
  if (d.p != 0) j["p"] = d.p;
  if (d.m != 0) j["m"] = d.m;
  return j;
}

RingDescriptor ring_from(const json& j) {
  RingDescriptor d;
  d.kind = j.at("ring").get<std::string>();
  d.p = j.value("p", 0ul);
  d.m = j.value("m", 0u);
  return d;
}

template <class R>
json element_json(const Element<R>& x) {
  json j;
  j["ring"] = ring_json(x.ring().descriptor());
  std::vector<Monomial> order;
  order.reserve(x.size());
  for (const auto& [k, c] : x.terms()) order.push_back(Monomial::from_key(k));
  std::sort(order.begin(), order.end(), [](const Monomial& l, const Monomial& r) {
    return std::tie(l.a, l.b, l.c) < std::tie(r.a, r.b, r.c);
  });
  json terms = json::array();
  for (const Monomial& m : order) {
    json t;
    t["f"] = m.a;
    t["h"] = m.b;
    t["e"] = m.c;
    t["coef"] = x.ring().str(x.coeff(m));
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

template <class R, class ParseCoef>
Element<R> element_from(const json& j, const R& ring, ParseCoef parse) {
  Element<R> out(ring);
  for (const auto& t : j.at("terms")) {
    Monomial m{t.at("f").get<std::uint32_t>(), t.at("h").get<std::uint32_t>(),
               t.at("e").get<std::uint32_t>()};
    out.add_term(m, parse(t.at("coef").get<std::string>()));
  }
  return out;
}

RingDescriptor expect_kind(const json& j, const std::string& kind) {
  RingDescriptor d = ring_from(j.at("ring"));
  if (d.kind != kind)
    throw std::invalid_argument("element_from_json: expected ring '" + kind + "', got '" +
                                d.kind + "'");
  return d;
}

BigInt parse_bigint(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty coefficient");
  BigInt v;
  if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("bad integer coefficient: " + s);
  return v;
}

BigRat parse_bigrat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty coefficient");
  BigRat v;
  if (mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational coefficient: " + s);
  v.canonicalize();
  return v;
}

}  // namespace

std::string ring_to_json(const RingDescriptor& d) { return ring_json(d).dump(); }

RingDescriptor ring_from_json(const std::string& text) {
  return ring_from(json::parse(text));
}

std::string element_to_json(const Element<RingZ>& x) { return element_json(x).dump(); }
std::string element_to_json(const Element<RingQp>& x) { return element_json(x).dump(); }
std::string element_to_json(const Element<RingFp>& x) { return element_json(x).dump(); }
std::string element_to_json(const Element<RingZpM>& x) { return element_json(x).dump(); }

Element<RingZ> element_z_from_json(const std::string& text) {
  json j = json::parse(text);
  expect_kind(j, "Z");
  return element_from(j, RingZ{}, parse_bigint);
}

Element<RingQp> element_qp_from_json(const std::string& text) {
  json j = json::parse(text);
  RingDescriptor d = expect_kind(j, "Zp-local");
  RingQp ring(d.p);
  return element_from(j, ring, [&](const std::string& s) {
    return ring.from_rational(parse_bigrat(s));
  });
}

Element<RingFp> element_fp_from_json(const std::string& text) {
  json j = json::parse(text);
  RingDescriptor d = expect_kind(j, "Fp");
  RingFp ring(d.p);
  return element_from(j, ring, [&](const std::string& s) {
    return ring.from_bigint(parse_bigint(s));
  });
}

Element<RingZpM> element_zpm_from_json(const std::string& text) {
  json j = json::parse(text);
  RingDescriptor d = expect_kind(j, "Z/p^m");
  RingZpM ring(d.p, d.m);
  return element_from(j, ring, [&](const std::string& s) {
    return ring.from_bigint(parse_bigint(s));
  });
}

}  // namespace sl2dist
