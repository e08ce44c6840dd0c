#include "secants/builtin_data.hpp"

#include <cstddef>

namespace secants::data {

namespace {

const char* const kBase[16] = {
    "1", "0", "0", "0",
    "1.4351", "0.6797", "3.9435", "7.7238",
    "-1.3085", "4.6694", "13.1949", "5.1509",
    "1.1573", "1.2007", "5.7272", "8.6591"};

const char* const kLoop1V1_re[16] = {
    "1", "0", "0", "0",
    "-4.9127", "7.4923", "-2.8416", "13.4085",
    "6.3049", "-0.9184", "18.7312", "-1.2645",
    "-3.6841", "6.8741", "-1.4732", "12.9186"};
const char* const kLoop1V1_im[16] = {
    "0", "0", "0", "0",
    "5.2184", "-5.3867", "4.9372", "-6.7213",
    "-7.1142", "2.8836", "-3.9457", "6.1189",
    "6.4725", "-4.5526", "7.0034", "-5.6418"};

const char* const kLoop1V2_re[16] = {
    "1", "0", "0", "0",
    "-4.6432", "7.1089", "-3.2147", "13.6874",
    "6.1085", "-1.1876", "18.3925", "-0.9034",
    "-3.9218", "7.1428", "-1.0986", "13.2149"};
const char* const kLoop1V2_im[16] = {
    "0", "0", "0", "0",
    "5.0037", "-5.1026", "5.2413", "-6.5042",
    "-6.8749", "2.5418", "-4.2146", "6.3621",
    "6.7541", "-4.9185", "6.7217", "-5.3014"};

const char* const kLoop2V1_re[16] = {
    "1", "0", "0", "0",
    "-6.8423", "-7.4135", "12.9184", "0.3642",
    "8.2146", "13.2841", "21.7065", "-2.1934",
    "5.7628", "9.6825", "-1.5162", "14.8326"};
const char* const kLoop2V1_im[16] = {
    "0", "0", "0", "0",
    "7.5184", "-6.1187", "8.2746", "-7.5238",
    "-9.3275", "5.8193", "-4.1627", "9.4216",
    "4.1942", "-8.0413", "6.2749", "-3.9817"};

const char* const kLoop2V2_re[16] = {
    "1", "0", "0", "0",
    "-4.6385", "7.1638", "-3.1047", "13.7426",
    "6.0174", "-1.2439", "18.4084", "-0.9136",
    "-3.9126", "7.2148", "-1.0987", "13.2143"};
const char* const kLoop2V2_im[16] = {
    "0", "0", "0", "0",
    "4.9412", "-5.1029", "5.2841", "-6.4487",
    "-7.3821", "2.6017", "-4.2836", "5.8764",
    "6.7318", "-4.8745", "6.7215", "-5.3816"};

const char* const kGallery0[16] = {
    "1", "0", "0", "0",
    "1.4351", "0.6797", "3.9435", "7.7238",
    "-1.3085", "4.6694", "13.1949", "5.1509",
    "1.1573", "1.2007", "5.7272", "8.6591"};

const char* const kGallery1[16] = {
    "1", "0", "0", "0",
    "0.7519", "0.1524", "2.8796", "7.6158",
    "-1.0069", "3.7048", "15.1121", "7.9388",
    "1.2271", "0.1795", "3.6345", "10.6654"};

const char* const kGallery2[16] = {
    "1", "0", "0", "0",
    "0.7712", "1.0684", "4.0153", "6.8183",
    "-0.3876", "3.8568", "13.8269", "6.0562",
    "0.7904", "1.0239", "4.9333", "9.2222"};

const char* const kGallery3[16] = {
    "1", "0", "0", "0",
    "1.5875", "1.0292", "2.9179", "8.5023",
    "-2.241", "3.8004", "16.0167", "6.6939",
    "1.7921", "0.5681", "3.0176", "10.5398"};

const char* const kGallery4[16] = {
    "1", "0", "0", "0",
    "1.0321", "1.8134", "4.5132", "7.8117",
    "0.3835", "2.8268", "14.8081", "5.2579",
    "1.4025", "2.0517", "6.1857", "10.9519"};

const char* const kGallery5[16] = {
    "1", "0", "0", "0",
    "2.015", "1.9005", "2.2737", "9.2034",
    "-0.0362", "2.0729", "14.6727", "7.227",
    "1.8364", "1.7414", "4.0076", "10.9568"};

const char* const kGallery6[16] = {
    "1", "0", "0", "0",
    "0.2256", "1.2068", "5.2039", "7.9386",
    "-1.1289", "3.3178", "14.3586", "5.7655",
    "1.167", "3.1542", "2.6854", "9.8156"};

const char* const kGallery7[16] = {
    "1", "0", "0", "0",
    "-0.7792", "0.4435", "5.0652", "9.1369",
    "1.2123", "3.6701", "12.5914", "7.0705",
    "-0.2896", "2.7162", "3.8465", "9.6116"};

const char* const kGallery8[16] = {
    "1", "0", "0", "0",
    "1.7547", "3.4027", "1.7429", "7.6041",
    "-1.0823", "4.1538", "12.0008", "6.6773",
    "2.6459", "2.308", "3.5738", "8.8431"};

const char* const kGallery9[16] = {
    "1", "0", "0", "0",
    "0.0983", "4.0479", "2.2629", "6.9867",
    "-0.0267", "4.2539", "12.6067", "5.2851",
    "-1.3234", "2.3696", "3.535", "10.0737"};

const char* const kGallery10[16] = {
    "1", "0", "0", "0",
    "1.6872", "1.5909", "2.717", "7.874",
    "-1.0519", "3.4185", "14.1275", "6.8633",
    "2.7208", "1.3832", "4.2118", "6.8602"};

const double kBaseReps[][4] = {
    {0.975, 0.1977, 0.4144, 2.4773},
    {0.1052, 1.0123, 0.4063, -0.7032},
    {0.1089, 1.0266, 2.7003, -0.7031},
    {1.0006, -1.0064, 0.2684, -0.8378},
    {1.0311, -1.0077, -0.8386, -2.0733},
    {0.9846, -1.0399, -1.8183, 0.2619},
    {-0.061, -0.8453, -0.469, -0.0085},
    {-1.0078, 0.1115, -0.8657, -0.5436},
    {-0.6075, -0.3172, -0.4, -0.0465},
    {-1.0093, 0.1324, -0.8664, 0.0316}};

const double kGalleryReps1[][4] = {
    {-0.0973, 1.2278, 0.2872, 17.9477},
    {-0.0477, 1.205, -0.5659, 13.7519},
    {-0.0357, 1.2281, -0.5654, 0.2871},
    {-1.1977, 1.228, -0.7631, 0.2883},
    {-1.1961, 1.2023, -1.4348, -0.7619},
    {-1.1699, 1.2279, -1.5291, 0.2883},
    {-1.4968, 0.1556, -0.3699, 0.0476},
    {-1.1959, -0.0525, -0.7887, -0.285},
    {-1.1954, -0.0624, -0.7886, -0.0035}};

const double kGalleryReps2[][4] = {
    {0.2845, 0.9851, 0.2431, 3.5926},
    {0.1204, 1.0904, -0.4944, 4.3169},
    {-1.292, 0.9966, -1.3992, 0.1953},
    {0.0682, 1.0255, -0.4963, 0.2388},
    {-1.2405, 1.1041, -1.6107, -0.667},
    {-1.1738, 1.0127, -0.6361, 0.2009},
    {-1.2561, 0.1874, -0.9975, -0.0484},
    {-1.2469, 0.146, -0.9924, -0.2785}};

const double kGalleryReps3[][4] = {
    {-0.0294, 1.04, -0.6271, 0.4619},
    {-0.0263, 1.119, -0.627, 5.0823},
    {-1.2378, 0.8883, -1.21, 0.2845},
    {-1.121, 0.9786, -0.7724, 0.3145},
    {-1.1058, 1.1389, -2.0696, -0.7637},
    {-1.0642, 0.0213, -0.6763, 0.0904},
    {-1.1036, -0.0243, -0.6875, -0.5651}};

const double kGalleryReps4[][4] = {
    {1.1362, -1.2222, 0.1631, -2.3167},
    {1.2304, -1.1314, -2.976, -0.423},
    {1.1713, -0.9253, 0.1881, -0.3896},
    {1.1766, -0.2196, -0.3302, 0.245},
    {1.2165, -0.0779, 2.7098, -0.3231},
    {1.1161, 0.1145, 0.272, 2.1508}};

const double kGalleryReps5[][4] = {
    {-0.0018, 1.0256, -0.4033, 0.4235},
    {-0.8601, 1.025, -0.4045, 0.2321},
    {-1.0606, 1.0271, -1.7495, -0.4058},
    {-1.1321, 0.8514, -1.3372, 0.1018},
    {0.145, 1.0265, -0.4033, 3.3072}};

const double kGalleryReps6[][4] = {
    {0.0458, -2.113, -0.6338, 0.0915},
    {-0.0351, -1.8916, 0.081, -0.7441},
    {1.3628, -1.7109, 0.3347, -0.8727},
    {1.2607, 0.2935, -0.4365, 0.3849}};

const double kGalleryReps7[][4] = {
    {-1.4749, 2.0198, 0.2309, -0.6487},
    {-1.433, 1.0056, -0.5707, -0.876},
    {1.2187, -0.938, -2.1231, -0.1383}};

const double kGalleryReps8[][4] = {
    {-0.0307, 1.1047, 0.5412, 6.8077},
    {-0.6559, 1.2094, -4.186, 0.4012}};

const double kGalleryReps9[][4] = {
    {-1.0062, 1.2979, -0.5469, -3.3602}};

DecimalGrid real_grid(const char* const (&e)[16]) {
  DecimalGrid g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g[i][j] = {e[4 * i + j], ""};
  return g;
}

DecimalGrid complex_grid(const char* const (&re)[16], const char* const (&im)[16]) {
  DecimalGrid g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g[i][j] = {re[4 * i + j], im[4 * i + j]};
  return g;
}

template <std::size_t N>
std::vector<SolutionPoint> points_of(const double (&rows)[N][4]) {
  std::vector<SolutionPoint> out;
  out.reserve(N);
  for (std::size_t r = 0; r < N; ++r)
    out.push_back({rows[r][0], rows[r][1], rows[r][2], rows[r][3]});
  return out;
}

}  // namespace

const ParameterMatrix& base_matrix() {
  static const ParameterMatrix m = ParameterMatrix::from_decimals(real_grid(kBase));
  return m;
}

const std::array<SolutionPoint, 10>& base_representatives() {
  static const std::array<SolutionPoint, 10> reps = [] {
    std::array<SolutionPoint, 10> a;
    for (int i = 0; i < 10; ++i)
      a[i] = {kBaseReps[i][0], kBaseReps[i][1], kBaseReps[i][2], kBaseReps[i][3]};
    return a;
  }();
  return reps;
}

const ParameterMatrix& loop_vertex(int loop, int vertex) {
  static const ParameterMatrix l1v1 =
      ParameterMatrix::from_decimals(complex_grid(kLoop1V1_re, kLoop1V1_im));
  static const ParameterMatrix l1v2 =
      ParameterMatrix::from_decimals(complex_grid(kLoop1V2_re, kLoop1V2_im));
  static const ParameterMatrix l2v1 =
      ParameterMatrix::from_decimals(complex_grid(kLoop2V1_re, kLoop2V1_im));
  static const ParameterMatrix l2v2 =
      ParameterMatrix::from_decimals(complex_grid(kLoop2V2_re, kLoop2V2_im));
  if (loop == 1) {
    if (vertex == 1) return l1v1;
    if (vertex == 2) return l1v2;
  } else if (loop == 2) {
    if (vertex == 1) return l2v1;
    if (vertex == 2) return l2v2;
  }
  throw Error("loop_vertex: loop and vertex must be in {1,2}");
}

const std::array<EdgeRoots, 3>& loop_edge_roots(int loop) {
  using namespace std::complex_literals;
  static const std::array<EdgeRoots, 3> roots1 = {{
      {-0.5753 - 2.1704i, 0.8602 + 0.2906i, 1.0972 - 0.0278i},
      {-208.4283 + 22.1148i, 0.3501 - 0.1134i, 14.6605 - 13.7360i},
      {-0.1782 + 0.0504i, 0.0944 + 0.2431i, 2.1115 - 1.0213i},
  }};
  static const std::array<EdgeRoots, 3> roots2 = {{
      {-5.9217 + 6.0785i, 0.9967 - 0.0002i, 1.8131 - 0.1332i},
      {-5.0820 + 8.5990i, -0.0443 - 0.0015i, 0.1373 + 0.6700i},
      {-0.1800 + 0.0417i, 0.1429 + 0.2067i, 2.6396 - 1.0135i},
  }};
  if (loop == 1) return roots1;
  if (loop == 2) return roots2;
  throw Error("loop_edge_roots: loop must be 1 or 2");
}

const std::array<std::array<int, 10>, 2>& reference_loop_permutations() {
  // sigma1 = (1)(2 6)(3 10 5)(4 8 9)(7), sigma2 = (1 8 9 3 10 5 7 2)(4 6)
  static const std::array<std::array<int, 10>, 2> perms = {{
      {1, 6, 10, 8, 3, 2, 7, 9, 4, 5},
      {8, 1, 10, 6, 7, 4, 2, 9, 3, 5},
  }};
  return perms;
}

const std::vector<GalleryEntry>& census_gallery() {
  static const std::vector<GalleryEntry> gallery = [] {
    static const ParameterMatrix g1 = ParameterMatrix::from_decimals(real_grid(kGallery1));
    static const ParameterMatrix g2 = ParameterMatrix::from_decimals(real_grid(kGallery2));
    static const ParameterMatrix g3 = ParameterMatrix::from_decimals(real_grid(kGallery3));
    static const ParameterMatrix g4 = ParameterMatrix::from_decimals(real_grid(kGallery4));
    static const ParameterMatrix g5 = ParameterMatrix::from_decimals(real_grid(kGallery5));
    static const ParameterMatrix g6 = ParameterMatrix::from_decimals(real_grid(kGallery6));
    static const ParameterMatrix g7 = ParameterMatrix::from_decimals(real_grid(kGallery7));
    static const ParameterMatrix g8 = ParameterMatrix::from_decimals(real_grid(kGallery8));
    static const ParameterMatrix g9 = ParameterMatrix::from_decimals(real_grid(kGallery9));
    static const ParameterMatrix g10 = ParameterMatrix::from_decimals(real_grid(kGallery10));
    std::vector<GalleryEntry> v;
    v.push_back({{10, 0, 0}, base_matrix(),
                 std::vector<SolutionPoint>(base_representatives().begin(),
                                            base_representatives().end())});
    v.push_back({{9, 1, 0}, g1, points_of(kGalleryReps1)});
    v.push_back({{8, 0, 0}, g2, points_of(kGalleryReps2)});
    v.push_back({{7, 3, 0}, g3, points_of(kGalleryReps3)});
    v.push_back({{6, 0, 0}, g4, points_of(kGalleryReps4)});
    v.push_back({{5, 1, 0}, g5, points_of(kGalleryReps5)});
    v.push_back({{4, 1, 1}, g6, points_of(kGalleryReps6)});
    v.push_back({{3, 0, 1}, g7, points_of(kGalleryReps7)});
    v.push_back({{2, 0, 0}, g8, points_of(kGalleryReps8)});
    v.push_back({{1, 0, 3}, g9, points_of(kGalleryReps9)});
    v.push_back({{0, 0, 0}, g10, {}});
    return v;
  }();
  return gallery;
}

const std::vector<std::array<int, 3>>& realized_tuples_reference() {
  static const std::vector<std::array<int, 3>> realized = {
      {0, 0, 0}, {0, 0, 2}, {0, 0, 4}, {0, 0, 6},
      {0, 0, 8}, {0, 1, 1}, {0, 1, 3}, {0, 1, 5},
      {0, 1, 7}, {0, 2, 0}, {0, 2, 2}, {0, 2, 4},
      {0, 2, 6}, {0, 3, 1}, {0, 3, 3}, {0, 3, 5},
      {0, 4, 0}, {0, 4, 2}, {0, 4, 4}, {0, 5, 1},
      {0, 5, 3}, {0, 6, 0}, {0, 6, 2}, {0, 7, 1},
      {0, 8, 0}, {1, 0, 1}, {1, 0, 3}, {1, 0, 5},
      {1, 1, 0}, {1, 1, 2}, {1, 1, 4}, {1, 2, 1},
      {1, 2, 3}, {1, 2, 5}, {1, 3, 0}, {1, 3, 2},
      {1, 3, 4}, {1, 4, 1}, {1, 4, 3}, {1, 5, 0},
      {1, 5, 2}, {1, 6, 1}, {1, 7, 0}, {2, 0, 0},
      {2, 0, 2}, {2, 0, 4}, {2, 0, 6}, {2, 0, 8},
      {2, 1, 1}, {2, 1, 3}, {2, 1, 5}, {2, 1, 7},
      {2, 2, 0}, {2, 2, 2}, {2, 2, 4}, {2, 2, 6},
      {2, 3, 1}, {2, 3, 3}, {2, 3, 5}, {2, 4, 0},
      {2, 4, 2}, {2, 4, 4}, {2, 5, 1}, {2, 5, 3},
      {2, 6, 0}, {3, 0, 1}, {3, 0, 3}, {3, 0, 5},
      {3, 0, 7}, {3, 1, 0}, {3, 1, 2}, {3, 1, 4},
      {3, 1, 6}, {3, 2, 1}, {3, 2, 3}, {3, 2, 5},
      {3, 3, 0}, {3, 3, 2}, {3, 3, 4}, {3, 4, 1},
      {3, 4, 3}, {3, 5, 0}, {4, 0, 0}, {4, 0, 2},
      {4, 0, 4}, {4, 1, 1}, {4, 1, 3}, {4, 1, 5},
      {4, 2, 0}, {4, 2, 2}, {4, 2, 4}, {4, 3, 1},
      {4, 3, 3}, {4, 4, 0}, {5, 0, 1}, {5, 0, 3},
      {5, 0, 5}, {5, 1, 0}, {5, 1, 2}, {5, 1, 4},
      {5, 2, 1}, {5, 2, 3}, {5, 3, 0}, {5, 3, 2},
      {5, 4, 1}, {5, 5, 0}, {6, 0, 0}, {6, 0, 2},
      {6, 0, 4}, {6, 1, 1}, {6, 1, 3}, {6, 2, 0},
      {6, 2, 2}, {6, 3, 1}, {6, 4, 0}, {7, 0, 1},
      {7, 0, 3}, {7, 1, 0}, {7, 1, 2}, {7, 2, 1},
      {7, 3, 0}, {8, 0, 0}, {8, 0, 2}, {8, 1, 1},
      {8, 2, 0}, {9, 0, 1}, {9, 1, 0}, {10, 0, 0}};
  return realized;
}

const std::vector<std::pair<std::array<int, 3>, long>>& top_triples_reference() {
  static const std::vector<std::pair<std::array<int, 3>, long>> top = {
      {{0, 1, 1}, 21830}, {{0, 2, 0}, 11811}, {{0, 0, 0}, 10620},
      {{1, 0, 1}, 9960},  {{0, 0, 2}, 7280},  {{0, 4, 0}, 5309},
      {{0, 3, 1}, 4340},  {{1, 3, 0}, 3510},  {{2, 1, 1}, 3390},
      {{1, 1, 0}, 3310}};
  return top;
}

const std::array<std::pair<int, long>, 6>& frequency_reference() {
  static const std::array<std::pair<int, long>, 6> freq = {{
      {0, 10620}, {2, 55741}, {4, 27979}, {6, 4940}, {8, 660}, {10, 60}}};
  return freq;
}

}  // namespace secants::data
