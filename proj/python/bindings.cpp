#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rabin_nf/attacks.hpp"
#include "rabin_nf/bigint.hpp"
#include "rabin_nf/error.hpp"
#include "rabin_nf/keygen.hpp"
#include "rabin_nf/scheme.hpp"
#include "rabin_nf/serialize.hpp"
#include "rabin_nf/sqrt_engine.hpp"

namespace py = pybind11;
using namespace rabin_nf;

// Python int <-> BigInt through hexadecimal text.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    object hex = reinterpret_steal<object>(PyNumber_ToBase(src.ptr(), 16));
    if (!hex) {
      PyErr_Clear();
      return false;
    }
    std::string text = hex.cast<std::string>();
    bool negative = !text.empty() && text[0] == '-';
    // "0x..." or "-0x..."
    value.set_str(text.substr(negative ? 3 : 2), 16);
    if (negative) value = -value;
    return true;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    std::string text = v.get_str(16);
    return PyLong_FromString(text.c_str(), nullptr, 16);
  }
};
}  // namespace pybind11::detail

namespace {

std::unique_ptr<RandomSource> make_rng(std::optional<std::uint64_t> seed) {
  if (seed) return std::make_unique<DeterministicRandom>(*seed);
  return std::make_unique<SystemRandom>();
}

const NumberField& field_for(const std::string& profile) { return find_profile(profile).field; }

std::vector<BigInt> coeffs_of(const RingElement& e) { return e.coeffs; }

std::vector<std::uint8_t> as_bytes(const py::bytes& b) {
  std::string s = b;
  return {s.begin(), s.end()};
}

py::bytes to_bytes(const std::vector<std::uint8_t>& v) {
  return py::bytes(reinterpret_cast<const char*>(v.data()), v.size());
}

std::pair<BigInt, BigInt> roots_attack(const std::string& profile, const BigInt& n,
                                       const std::vector<BigInt>& m1, const std::vector<BigInt>& m2) {
  const NumberField& f = field_for(profile);
  return attack::factor_from_roots(n, f.element(m1, n), f.element(m2, n), f);
}

}  // namespace

PYBIND11_MODULE(_rabin_nf, m) {
  m.doc() = "Rabin encryption over rings of integers of number fields";

  static py::exception<Error> rabin_error(m, "RabinError");
  static py::exception<AccidentalFactorError> factor_error(m, "AccidentalFactorError", rabin_error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    auto raise = [](PyObject* type, const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(type)(e.what());
      exc.attr("code") = error_code_name(e.code());
      if (const auto* af = dynamic_cast<const AccidentalFactorError*>(&e)) exc.attr("factor") = af->factor();
      PyErr_SetObject(type, exc.ptr());
    };
    try {
      if (p) std::rethrow_exception(p);
    } catch (const AccidentalFactorError& e) {
      raise(factor_error.ptr(), e);
    } catch (const Error& e) {
      raise(rabin_error.ptr(), e);
    }
  });

  py::class_<FieldProfile>(m, "Profile")
      .def_readonly("name", &FieldProfile::name)
      .def_property_readonly("kind", [](const FieldProfile& p) { return profile_kind_name(p.kind); })
      .def_property_readonly("degree", [](const FieldProfile& p) { return p.field.degree(); })
      .def_property_readonly("polynomial", [](const FieldProfile& p) { return p.field.poly(); })
      .def_readonly("modulus", &FieldProfile::modulus_d)
      .def_readonly("residues", &FieldProfile::residues)
      .def("__repr__", [](const FieldProfile& p) { return "<Profile " + p.name + ">"; });

  m.def("profiles", [] { return builtin_profiles(); }, "The built-in field profiles.");
  m.def("profile", &find_profile, py::return_value_policy::copy, py::arg("name"));

  py::class_<PublicKey>(m, "PublicKey")
      .def(py::init<std::string, BigInt>(), py::arg("profile"), py::arg("n"))
      .def_readonly("profile", &PublicKey::profile)
      .def_readonly("n", &PublicKey::n)
      .def("to_text", &serialize_public_key)
      .def_static("from_text", &parse_public_key, py::arg("text"))
      .def(py::self == py::self)
      .def("__repr__", [](const PublicKey& k) { return "<PublicKey " + k.profile + ">"; });

  py::class_<PrivateKey>(m, "PrivateKey")
      .def_readonly("profile", &PrivateKey::profile)
      .def_readonly("n", &PrivateKey::n)
      .def_readonly("p", &PrivateKey::p)
      .def_readonly("q", &PrivateKey::q)
      .def("public_key", &PrivateKey::public_key)
      .def("to_text", &serialize_private_key)
      .def_static(
          "from_text",
          [](const std::string& text) { return parse_private_key(text, field_for(key_profile_name(text))); },
          py::arg("text"))
      .def(py::self == py::self)
      .def("__repr__", [](const PrivateKey& k) { return "<PrivateKey " + k.profile + ">"; });

  py::class_<Ciphertext>(m, "Ciphertext")
      .def_property_readonly("c", [](const Ciphertext& ct) { return coeffs_of(ct.c); })
      .def_readonly("b0", &Ciphertext::b0)
      .def_readonly("b1", &Ciphertext::b1)
      .def("to_text", &serialize_ciphertext)
      .def_static(
          "from_text",
          [](const std::string& text, const PublicKey& pk) {
            return parse_ciphertext(text, pk, field_for(pk.profile));
          },
          py::arg("text"), py::arg("pk"))
      .def(py::self == py::self);

  m.def(
      "keygen",
      [](const std::string& profile, unsigned long lam, std::optional<unsigned long> prime_bits,
         std::optional<std::uint64_t> seed) {
        auto rng = make_rng(seed);
        const FieldProfile& fp = find_profile(profile);
        KeyPair k = prime_bits ? keygen_with_prime_bits(fp, *prime_bits, *rng) : keygen(fp, lam, *rng);
        return std::make_pair(k.pub, k.priv);
      },
      py::arg("profile"), py::arg("lam") = 16, py::arg("prime_bits") = py::none(),
      py::arg("seed") = py::none(),
      "Key pair (pk, sk). Without a seed the system entropy source is used.");

  m.def("capacity", [](const PublicKey& pk) { return message_capacity(pk.n, field_for(pk.profile).degree()); },
        py::arg("pk"), "Longest message in bytes.");
  m.def(
      "encode",
      [](const py::bytes& data, const PublicKey& pk) {
        return coeffs_of(encode(as_bytes(data), pk.n, field_for(pk.profile)).m);
      },
      py::arg("data"), py::arg("pk"));
  m.def(
      "decode",
      [](const std::vector<BigInt>& coeffs, const PublicKey& pk) {
        const NumberField& f = field_for(pk.profile);
        return to_bytes(decode(Plaintext{f.element(coeffs, pk.n)}, f));
      },
      py::arg("coeffs"), py::arg("pk"));
  m.def(
      "encrypt",
      [](const PublicKey& pk, const py::bytes& data) {
        const NumberField& f = field_for(pk.profile);
        return encrypt(pk, encode(as_bytes(data), pk.n, f), f);
      },
      py::arg("pk"), py::arg("data"));
  m.def(
      "decrypt",
      [](const PrivateKey& sk, const Ciphertext& ct) {
        const NumberField& f = field_for(sk.profile);
        return to_bytes(decode(decrypt(sk, ct, sk.public_key(), f), f));
      },
      py::arg("sk"), py::arg("ct"));
  m.def(
      "square_roots",
      [](const PrivateKey& sk, const std::vector<BigInt>& c) {
        const NumberField& f = field_for(sk.profile);
        std::vector<std::vector<BigInt>> out;
        for (const auto& r : square_roots(sk, f.element(c, sk.n), f)) out.push_back(r.coeffs);
        return out;
      },
      py::arg("sk"), py::arg("c"), "The four square roots of c modulo N.");

  m.def(
      "sqrt_mod_prime",
      [](const std::vector<BigInt>& c, const std::vector<BigInt>& g, const BigInt& p,
         std::optional<std::uint64_t> seed) {
        NumberField f = NumberField::make(g);
        PrimeContext ctx(p, static_cast<unsigned long>(f.degree()));
        auto rng = make_rng(seed.value_or(0));
        return sqrt_mod_prime(f.element(c, p), ctx, f, rng.get()).coeffs;
      },
      py::arg("c"), py::arg("g"), py::arg("p"), py::arg("seed") = py::none(),
      "A square root of c in Z[x]/(p, g), with g irreducible modulo p.");

  py::module_ atk = m.def_submodule("attack", "Factoring badly chosen moduli");
  atk.def(
      "unequal_degrees",
      [](const std::string& profile, const BigInt& n, const std::vector<BigInt>& h) {
        return attack::factor_unequal_degrees(n, attack::GeneratorIdeal{n, h}, field_for(profile));
      },
      py::arg("profile"), py::arg("n"), py::arg("h"));
  atk.def("from_roots", &roots_attack, py::arg("profile"), py::arg("n"), py::arg("m1"), py::arg("m2"));
  atk.def("generator_gcd", &attack::factor_from_generator_gcd, py::arg("generators"), py::arg("n"));
  atk.def(
      "quadratic_reduction",
      [](const BigInt& n, std::size_t k, std::optional<std::uint64_t> seed) {
        auto rng = make_rng(seed);
        auto r = attack::quadratic_reduction(n, attack::exact_oracle(), k, *rng);
        py::dict out;
        out["factor"] = r.factor ? py::cast(*r.factor) : py::none();
        out["iterations"] = r.iterations;
        out["route"] = r.route ? py::cast(std::string(attack::reduction_route_name(*r.route))) : py::none();
        return out;
      },
      py::arg("n"), py::arg("k") = 8, py::arg("seed") = py::none(),
      "Reduction to ideal factoring with the brute-force oracle; N <= 2^20.");
}
