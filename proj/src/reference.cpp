#include "chromatic/reference.hpp"

#include <stdexcept>

namespace chromatic::reference {

namespace {

const char* const kPoly1[] = {"1"};
const char* const kPoly2[] = {"1", "1"};
const char* const kPoly3[] = {"1", "3", "-3", "2"};
const char* const kPoly4[] = {"1", "6", "-15", "24", "-15", "0", "3"};
const char* const kPoly5[] = {"1", "10", "-45", "130", "-210", "234", "-265",
                              "310", "-240", "90", "-10"};
const char* const kPoly6[] = {"1", "15", "-105", "475", "-1365", "2985",
                              "-5405", "7035", "-3645", "-6230", "15960",
                              "-17775", "12240", "-5475", "1470", "-175"};
const char* const kPoly7[] = {
    "1",        "21",       "-210",     "1365",     "-5985",   "20391",
    "-55769",   "116850",   "-187215",  "290885",   "-639786", "1586382",
    "-3157945", "4648770",  "-5036475", "3997770",  "-2275014", "880215",
    "-202195",  "14175",    "4725",     "-949"};
const char* const kPoly8[] = {
    "1",           "28",          "-378",        "3332",
    "-20475",      "98532",       "-380940",     "1182440",
    "-3067617",    "7145320",     "-14697998",   "20100528",
    "11727835",    "-172019372",  "588213840",   "-1315890324",
    "2210870585",  "-2942158968", "3195414040",  "-2889645360",
    "2203036185",  "-1420223760", "767083590",   "-339285492",
    "118474685",   "-30989560",   "5615022",     "-615412",
    "29701"};
const char* const kPoly9[] = {
    "1",              "36",             "-630",           "7224",
    "-58905",         "377748",         "-1957578",       "8339220",
    "-30222918",      "95465300",       "-257330430",     "565290936",
    "-1079354325",    "2874704364",     "-12991012668",   "57042006564",
    "-196512115905",  "531668425428",   "-1161021072498", "2091295480932",
    "-3149579225331", "3990846997140",  "-4251933252108", "3777632482680",
    "-2744668858953", "1562700838860",  "-621340032978",  "88988260340",
    "97781480685",    "-102158239248",  "57249093300",    "-22481416692",
    "6486125310",     "-1362517968",    "198489942",      "-17953236",
    "756370"};

// means at 16384 samples, p in {0.3, 0.5, 0.7}
constexpr McReference kMcAc[] = {
    {10, 0.3, 3.05609}, {10, 0.5, 3.98541}, {10, 0.7, 5.18646},
    {11, 0.3, 3.17175}, {11, 0.5, 4.18091}, {11, 0.7, 5.50482},
    {12, 0.3, 3.28790}, {12, 0.5, 4.37830}, {12, 0.7, 5.78979},
    {13, 0.3, 3.41375}, {13, 0.5, 4.56677}, {13, 0.7, 6.08941},
    {14, 0.3, 3.53948}, {14, 0.5, 4.76459},
    {15, 0.3, 3.67120},
};

constexpr McReference kMcIrcm[] = {
    {7, 0.3, 2.57208},  {7, 0.5, 3.28235},  {7, 0.7, 4.14459},
    {9, 0.5, 3.76068},
    {20, 0.3, 4.13464}, {20, 0.5, 5.73358}, {20, 0.7, 7.86962},
    {30, 0.5, 7.10309},
    {40, 0.3, 5.84442}, {40, 0.5, 8.33148}, {40, 0.7, 11.99114},
    {50, 0.7, 13.83203},
};

} // namespace

std::span<const char* const> polynomial_coeffs(int n)
{
    switch (n) {
    case 1: return kPoly1;
    case 2: return kPoly2;
    case 3: return kPoly3;
    case 4: return kPoly4;
    case 5: return kPoly5;
    case 6: return kPoly6;
    case 7: return kPoly7;
    case 8: return kPoly8;
    case 9: return kPoly9;
    default:
        throw std::out_of_range("reference polynomials cover orders 1..9");
    }
}

std::span<const McReference> mc_ac_means() { return kMcAc; }

std::span<const McReference> mc_ircm_means() { return kMcIrcm; }

} // namespace chromatic::reference
