#include "quadhopf/displays.hpp"

#include <map>

#include "quadhopf/symcore/errors.hpp"

namespace quadhopf::displays {
namespace {

const std::map<std::string, std::string, std::less<>> kPolynomials = {
    {"theorem1.a",
     "16*x2^3*y1^2*y2 + 16*x2^2*y1^2*z - 16*x2^2*y1*y2*z - 16*x2^2*y1^2 - 8*x2^2*y1*y2 - 16*x2^2*y2^2 - 24*x2*y1*z^2 + 20*x2*y1*z - 8*x2*y2*z + 8*z^3 + 4*x2*y1 - 8*x1*y2 + 12*x2*y2 - 8*z^2 - 2*z + 1"},
    {"theorem1.b",
     "-32*x2^3*y2*z - 32*x1*x2^2*y2 + 32*x2^3*y2 - 32*x2^2*z^2 - 48*x1*x2*z + 64*x2^2*z - 16*x1^2 + 40*x1*x2 - 32*x2^2"},
    {"theorem1.c",
     "-2*x2*y1^3 - 4*x2*y1^2*y2 + 2*y1^2*z + 4*y1*y2*z + y1^2 + 2*y1*y2 + 4*y2^2"},
    {"theorem1.d",
     "4*x2*y1*z + 8*x2*y2*z - 4*x2*y1 + 8*x1*y2 - 12*x2*y2 - 4*z^2 + 2*z + 1"},
    {"theorem2.a",
     "144*x2^2*z^9 + 144*x2*y1*z^9 + 72*x1*x2*z^8 - 384*x2^2*z^8 - 240*x2*y1*z^8 - 72*x2*y2*z^8 - 72*z^10 - 192*x1*x2*z^7 + 112*x2^2*z^7 - 128*x2*y1*z^7 + 120*x2*y2*z^7 + 192*z^9 + 92*x1*x2*z^6 + 384*x2^2*z^6 + 256*x2*y1*z^6 + 28*x2*y2*z^6 - 92*z^8 + 96*x1*x2*z^5 - 208*x2^2*z^5 + 48*x2*y1*z^5 - 24*y1^2*z^5 - 68*x2*y2*z^5 - 96*z^7 - 40*x1*x2*z^4 - 64*x2^2*z^4 - 16*x2*y1*z^4 - 16*y1^2*z^4 - 28*x2*y2*z^4 + 12*y1*y2*z^4 + 28*z^6 - 32*x1*x2*z^3 - 48*x2^2*z^3 - 64*x2*y1*z^3 + 16*y1^2*z^3 + 4*x2*y2*z^3 + 8*y1*y2*z^3 + 48*z^5 - 12*x1*x2*z^2 + 64*x2^2*z^2 + 16*y1^2*z^2 + 16*x2*y2*z^2 - 2*y1*y2*z^2 + 18*z^4 + 16*x1*x2*z + 8*y1^2*z - 4*y1*y2*z - 24*z^3 - 2*y1*y2 - 2*z^2 + 1"},
    {"theorem2.b",
     "-144*x1*x2*z^9 + 144*x2*y2*z^9 - 72*x1^2*z^8 + 384*x1*x2*z^8 + 72*x1*y2*z^8 - 240*x2*y2*z^8 + 192*x1^2*z^7 - 112*x1*x2*z^7 - 120*x1*y2*z^7 - 128*x2*y2*z^7 - 92*x1^2*z^6 - 384*x1*x2*z^6 - 28*x1*y2*z^6 + 256*x2*y2*z^6 - 96*x1^2*z^5 + 208*x1*x2*z^5 + 68*x1*y2*z^5 + 48*x2*y2*z^5 - 24*y1*y2*z^5 - 24*z^7 + 40*x1^2*z^4 + 64*x1*x2*z^4 + 28*x1*y2*z^4 - 16*x2*y2*z^4 - 16*y1*y2*z^4 + 12*y2^2*z^4 + 32*z^6 + 32*x1^2*z^3 + 48*x1*x2*z^3 - 4*x1*y2*z^3 - 64*x2*y2*z^3 + 16*y1*y2*z^3 + 8*y2^2*z^3 + 24*z^5 + 12*x1^2*z^2 - 64*x1*x2*z^2 - 16*x1*y2*z^2 + 16*y1*y2*z^2 - 2*y2^2*z^2 - 32*z^4 - 16*x1^2*z + 8*y1*y2*z - 4*y2^2*z - 4*z^3 - 2*y2^2 + 4*z"},
    {"turiel.a",
     "-(2i)*x1^2*z^2 - (4i)*x1*x2*z^2 - (2i)*x2^2*z^2 + (2i)*y1^2*z^2 - (4i)*y1*y2*z^2 + (2i)*y2^2*z^2 - 4*x2*y1*z^2 + 4*x1*y2*z^2 + 8*x2*y2*z^2 + 4*z^4 + (2i)*x1^2*z + (4i)*x1*x2*z + (2i)*x2^2*z - (2i)*y1^2*z + (4i)*y1*y2*z - (2i)*y2^2*z + 4*x2*y1*z - 4*x1*y2*z - 8*x2*y2*z - 8*z^3 + (i)*x1^2 + (4i)*x1*x2 + (i)*x2^2 - (i)*y1^2 + (4i)*y1*y2 - (i)*y2^2 + 2*x2*y1 - 2*x1*y2 - 8*x2*y2 + 4*z"},
    {"turiel.b",
     "(2i)*x1^2*z^2 + (4i)*x1*x2*z^2 + (2i)*x2^2*z^2 + (2i)*y1^2*z^2 - (4i)*y1*y2*z^2 + (2i)*y2^2*z^2 - (2i)*x1^2*z - (4i)*x1*x2*z - (2i)*x2^2*z - (2i)*y1^2*z + (4i)*y1*y2*z - (2i)*y2^2*z + (4i)*z^3 - (i)*x1^2 - (4i)*x1*x2 - (i)*x2^2 - (i)*y1^2 + (4i)*y1*y2 - (i)*y2^2 - (6i)*z^2 + (i)"},
};

const std::map<std::string, MatrixText, std::less<>> kMatrices = {
  {"U",
     {
      {"1-z", "0", "-x2", "x1", "z", "0", "x2", "-x1"},
      {"0", "1-z", "-y1", "-y2", "0", "z", "y1", "y2"},
      {"-y2", "-x1", "z", "0", "y2", "x1", "1-z", "0"},
      {"y1", "-x2", "0", "z", "-y1", "x2", "0", "1-z"},
      {"z", "0", "x2", "-x1", "1-z", "0", "-x2", "x1"},
      {"0", "z", "y1", "y2", "0", "1-z", "-y1", "-y2"},
      {"y2", "x1", "1-z", "0", "-y2", "-x1", "z", "0"},
      {"-y1", "x2", "0", "1-z", "y1", "-x2", "0", "z"}}},
  {"M1",
     {
      {"-z+1", "-x2", "z", "x2", "0", "x1", "0", "-x1"},
      {"-y2", "z", "y2", "-z+1", "-x1", "0", "x1", "0"},
      {"z", "x2", "-z+1", "-x2", "0", "-x1", "0", "x1"},
      {"y2", "-z+1", "-y2", "z", "x1", "0", "-x1", "0"},
      {"0", "-y1", "0", "y1", "-z+1", "-y2", "z", "y2"},
      {"y1", "0", "-y1", "0", "-x2", "z", "x2", "-z+1"},
      {"0", "y1", "0", "-y1", "z", "y2", "-z+1", "-y2"},
      {"-y1", "0", "y1", "0", "x2", "-z+1", "-x2", "z"}}},
  {"E1",
     {
      {"1", "0", "0", "0"},
      {"0", "1", "0", "1"},
      {"0", "0", "1", "0"},
      {"0", "0", "0", "1"}}},
  {"E2",
     {
      {"1", "0", "0", "0"},
      {"0", "1", "0", "0"},
      {"0", "0", "1", "0"},
      {"-y2", "z-1", "y2", "1"}}},
  {"after_E1E2",
     {
      {"-z+1", "-x2", "z", "0", "0", "2*x1", "0", "-2*x1*z+x1"},
      {"-2*y2", "2*z-1", "2*y2", "0", "-2*x1", "0", "2*x1", "-4*x1*y2"},
      {"z", "x2", "-z+1", "0", "0", "-2*x1", "0", "2*x1*z-x1"},
      {"0", "0", "0", "1", "x1", "0", "-x1", "2*x1*y2"},
      {"0", "-y1", "0", "0", "-z+1", "-2*y2", "z", "0"},
      {"y1", "0", "-y1", "0", "-x2", "2*z-1", "x2", "-2*x2*y2-2*z^2+2*z"},
      {"0", "y1", "0", "0", "z", "2*y2", "-z+1", "0"},
      {"0", "0", "0", "0", "0", "0", "0", "1"}}},
  {"S1",
     {
      {"0", "0", "0", "-x1"},
      {"0", "0", "0", "0"},
      {"0", "0", "0", "x1"},
      {"-x1", "0", "x1", "-2*x1*y2"}}},
  {"after_S1",
     {
      {"-z+1", "-x2", "z", "0", "0", "2*x1", "0", "0"},
      {"-2*y2", "2*z-1", "2*y2", "0", "-2*x1", "0", "2*x1", "0"},
      {"z", "x2", "-z+1", "0", "0", "-2*x1", "0", "0"},
      {"0", "0", "0", "1", "0", "0", "0", "0"},
      {"0", "-y1", "0", "0", "-z+1", "-2*y2", "z", "0"},
      {"y1", "0", "-y1", "0", "-x2", "2*z-1", "x2", "0"},
      {"0", "y1", "0", "0", "z", "2*y2", "-z+1", "0"},
      {"0", "0", "0", "0", "0", "0", "0", "1"}}},
  {"M2",
     {
      {"-z+1", "-x2", "z", "0", "2*x1", "0"},
      {"-2*y2", "2*z-1", "2*y2", "-2*x1", "0", "2*x1"},
      {"z", "x2", "-z+1", "0", "-2*x1", "0"},
      {"0", "-y1", "0", "-z+1", "-2*y2", "z"},
      {"y1", "0", "-y1", "-x2", "2*z-1", "x2"},
      {"0", "y1", "0", "z", "2*y2", "-z+1"}}},
  {"E3",
     {
      {"1", "0", "1"},
      {"0", "1", "0"},
      {"0", "0", "1"}}},
  {"E4",
     {
      {"1", "0", "0"},
      {"0", "1", "0"},
      {"-z", "-x2", "1"}}},
  {"S2",
     {
      {"0", "0", "0"},
      {"0", "0", "2*x1"},
      {"0", "2*x1", "2*x1*x2"}}},
  {"M3",
     {
      {"-2*z+1", "-2*x2", "0", "4*x1"},
      {"-2*y2", "2*z-1", "-4*x1", "0"},
      {"0", "-y1", "-2*z+1", "-2*y2"},
      {"y1", "0", "-2*x2", "2*z-1"}}},
  {"E5",
     {
      {"1", "2*x2"},
      {"0", "1"}}},
  {"E6",
     {
      {"1", "0"},
      {"-y1", "1"}}},
  {"S3",
     {
      {"0", "0"},
      {"0", "-1"}}},
  {"S4",
     {
      {"0", "0"},
      {"0", "1-(2*z-1)"}}},
  {"M4",
     {
      {"-4*x2*y1*z+4*x2*y1-4*x2*y2-2*z+1", "4*x2*z-4*x2", "-8*x1*x2", "8*x2^2*y2+8*x2*z+4*x1-8*x2"},
      {"-2*y1*z+y1-2*y2", "2*z-1", "-4*x1", "4*x2*y2+2*z-2"},
      {"y1^2", "-y1", "-2*z+1", "-y1-2*y2"},
      {"-2*x2*y1^2+2*y1*z+2*y2", "2*x2*y1-2*z+1", "4*x2*z+4*x1-4*x2", "1"}}},
  {"E7",
     {
      {"1", "2*x2"},
      {"0", "1"}}},
  {"E8",
     {
      {"1", "0"},
      {"-y1", "1"}}},
};

}  // namespace

std::string_view polynomial(std::string_view key) {
  auto it = kPolynomials.find(key);
  if (it == kPolynomials.end()) throw InvalidArgument("no displayed polynomial " + std::string(key));
  return it->second;
}

const MatrixText& matrix(std::string_view key) {
  auto it = kMatrices.find(key);
  if (it == kMatrices.end()) throw InvalidArgument("no displayed matrix " + std::string(key));
  return it->second;
}

}  // namespace quadhopf::displays

