#include "fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace odq::fixtures {

namespace {

std::string pad(std::uint64_t v, int width) {
  std::string s = std::to_string(v);
  if (static_cast<int>(s.size()) < width) s.insert(0, static_cast<std::size_t>(width) - s.size(), '0');
  return s;
}

std::string digits(Rng& rng, int width) {
  std::string s;
  for (int i = 0; i < width; ++i) s.push_back(static_cast<char>('0' + rng.below(10)));
  return s;
}

// Leading digit never zero.
std::string number(Rng& rng, int width) {
  return std::string(1, static_cast<char>('1' + rng.below(9))) + digits(rng, width - 1);
}

struct Ymd {
  int y, m, d;
};

Ymd random_date(Rng& rng, int from_year, int to_year) {
  return {from_year + static_cast<int>(rng.below(static_cast<std::uint64_t>(to_year - from_year + 1))),
          1 + static_cast<int>(rng.below(12)), 1 + static_cast<int>(rng.below(28))};
}

std::string dmy_dots(Ymd d) { return pad(d.d, 2) + "." + pad(d.m, 2) + "." + pad(d.y, 4); }
std::string mdy_slash(Ymd d) { return pad(d.m, 2) + "/" + pad(d.d, 2) + "/" + pad(d.y, 4); }
std::string mdy_dots(Ymd d) { return pad(d.m, 2) + "." + pad(d.d, 2) + "." + pad(d.y, 4); }

std::vector<std::size_t> rows_of(const std::vector<bool>& flags) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i]) out.push_back(i);
  }
  return out;
}

// k flagged rows chosen among the flagged rows of `from`.
std::vector<bool> pick_within(Rng& rng, const std::vector<bool>& from, std::size_t k) {
  auto rows = rows_of(from);
  if (k > rows.size()) throw std::invalid_argument("pick_within: not enough rows");
  for (std::size_t i = 0; i < k; ++i) std::swap(rows[i], rows[i + rng.below(rows.size() - i)]);
  std::vector<bool> out(from.size(), false);
  for (std::size_t i = 0; i < k; ++i) out[rows[i]] = true;
  return out;
}

std::vector<bool> either(const std::vector<bool>& a, const std::vector<bool>& b) {
  std::vector<bool> out(std::max(a.size(), b.size()), false);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (i < a.size() && a[i]) || (i < b.size() && b[i]);
  return out;
}

}  // namespace

std::vector<bool> pick_rows(Rng& rng, std::size_t n, std::size_t k, const std::vector<bool>& avoid) {
  std::size_t free_rows = n;
  for (std::size_t i = 0; i < avoid.size() && i < n; ++i) free_rows -= avoid[i] ? 1 : 0;
  if (k > free_rows) throw std::invalid_argument("pick_rows: not enough rows");
  std::vector<bool> out(n, false);
  if (k * 2 > free_rows) {
    // dense: shuffle the candidate list instead of rejection sampling
    std::vector<bool> allowed(n, true);
    for (std::size_t i = 0; i < avoid.size() && i < n; ++i) allowed[i] = !avoid[i];
    return pick_within(rng, allowed, k);
  }
  std::size_t chosen = 0;
  while (chosen < k) {
    auto r = static_cast<std::size_t>(rng.below(n));
    if (out[r] || (r < avoid.size() && avoid[r])) continue;
    out[r] = true;
    ++chosen;
  }
  return out;
}

Dataset register_dataset(std::size_t n, const RegisterSeeds& s) {
  Rng rng(0x5EED0001);
  auto name_null = pick_rows(rng, n, s.name_nulls);
  auto special_type = pick_rows(rng, n, s.type_text_nulls);
  auto registered_null = pick_rows(rng, n, s.registered_nulls);
  auto address_null = pick_rows(rng, n, s.address_nulls);
  auto address_id_null = either(pick_within(rng, address_null, s.address_overlap),
                                pick_rows(rng, n, s.address_id_nulls - s.address_overlap, address_null));
  auto region_null = pick_rows(rng, n, s.region_nulls);
  auto city_null = pick_rows(rng, n, s.city_nulls);
  auto post_null = pick_rows(rng, n, s.post_nulls);
  auto post_short = pick_rows(rng, n, s.post_short, post_null);
  auto atv_null = pick_rows(rng, n, s.atv_nulls);
  auto atv_short = pick_rows(rng, n, s.atv_short, atv_null);
  auto unclosed = pick_rows(rng, n, s.terminated_unclosed);
  auto terminated_closed = pick_rows(rng, n, std::min<std::size_t>(n / 80, n - s.terminated_unclosed), unclosed);
  auto closed_only = pick_rows(rng, n, std::min<std::size_t>(n / 200, n / 4), either(unclosed, terminated_closed));

  static const char* const kTypes[][2] = {
      {"SIA", "Sabiedrība ar ierobežotu atbildību"}, {"AS", "Akciju sabiedrība"},
      {"IK", "Individuālais komersants"},            {"ZS", "Zemnieku saimniecība"},
      {"KS", "Komandītsabiedrība"},                  {"PS", "Pilnsabiedrība"},
      {"BDR", "Biedrība"},                           {"NOD", "Nodibinājums"},
      {"KB", "Kooperatīvā sabiedrība"},              {"FIL", "Filiāle"},
      {"REL", "Reliģiskā organizācija"},             {"PAR", "Politiskā partija"},
      {"ARB", "Arodbiedrība"},                       {"UZN", "Uzņēmums"},
      {"SAB", "Sabiedriskā organizācija"},
  };
  static const char* const kSpecialTypes[] = {"ASF", "KOR", "PRO", "SAA", "SPA", "SPO"};
  static const char* const kStreets[] = {"Brīvības iela", "Elizabetes iela", "Krišjāņa Valdemāra iela", "Lāčplēša iela",
                                         "Dzirnavu iela", "Tērbatas iela", "Skolas iela", "Rīgas gatve"};
  static const char* const kCities[] = {"Rīga", "Daugavpils", "Liepāja", "Jelgava", "Jūrmala", "Ventspils", "Rēzekne"};
  static const char* const kWords[] = {"Alfa", "Baltija", "Dzintars", "Ozols", "Saule", "Vējš", "Zvaigzne", "Jūra",
                                       "Kalns", "Upe", "Meži", "Lauki", "Nams", "Ceļš", "Tilts", "Gaisma"};

  Dataset::Builder b("register.csv",
                     {"reg_number", "sepa", "name", "name_before_quotes", "name_in_quotes", "name_after_quotes",
                      "without_quotes", "regtype", "regtype_text", "type", "type_text", "registered", "terminated",
                      "closed", "address", "post_code", "address_id", "region_code", "city_code", "atv_code",
                      "reregistration_term", "updated"});
  std::vector<std::string> row(22);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& t = kTypes[rng.below(std::size(kTypes))];
    const std::string word = std::string(kWords[rng.below(std::size(kWords))]) + " " + std::to_string(i % 9973);
    row[0] = "4" + pad(1000000000ULL + i, 10);
    row[1] = rng.below(10) < 3 ? "LV" + digits(rng, 2) + "SEPA" : "";
    row[2] = name_null[i] ? "" : std::string(t[0]) + " \"" + word + "\"";
    row[3] = t[0];
    row[4] = word;
    row[5] = "";
    row[6] = word + ", " + t[0];
    row[7] = rng.below(4) == 0 ? "U" : "K";
    row[8] = row[7] == "U" ? "Uzņēmumu reģistrs" : "Komercreģistrs";
    if (special_type[i]) {
      row[9] = kSpecialTypes[rng.below(std::size(kSpecialTypes))];
      row[10] = "";
    } else {
      row[9] = t[0];
      row[10] = t[1];
    }
    Ymd reg = random_date(rng, 1991, 2017);
    row[11] = registered_null[i] ? "" : dmy_dots(reg);
    const bool terminated = unclosed[i] || terminated_closed[i];
    row[12] = terminated ? dmy_dots(random_date(rng, 2018, 2020)) : "";
    row[13] = (terminated_closed[i] || closed_only[i]) ? (rng.below(2) ? "L" : "R") : "";
    row[14] = address_null[i] ? ""
                              : std::string(kCities[rng.below(std::size(kCities))]) + ", " +
                                    kStreets[rng.below(std::size(kStreets))] + " " + std::to_string(1 + rng.below(120));
    row[15] = post_null[i] ? "" : post_short[i] ? number(rng, 3) : number(rng, 4);
    row[16] = address_id_null[i] ? "" : number(rng, 9);
    row[17] = region_null[i] ? "" : number(rng, 9);
    row[18] = city_null[i] ? "" : number(rng, 9);
    row[19] = atv_null[i] ? "" : atv_short[i] ? digits(rng, 5) : digits(rng, 7);
    row[20] = rng.below(50) == 0 ? dmy_dots(random_date(rng, 2004, 2008)) : "";
    row[21] = dmy_dots(random_date(rng, 2018, 2018));
    b.add_row(row);
  }
  return std::move(b).build();
}

Dataset gis_dataset() {
  constexpr std::size_t n = kGisRows;
  Rng rng(0x5EED0005);
  static const std::vector<std::string> header{
      "is_number",        "is_name",          "personal_data",      "financial_data",     "service_rate",
      "website",          "officer_number",   "officer_name",       "officer_phone",      "officer_email",
      "manager_code",     "holder_code",      "holder_name",        "status",             "closing_date",
      "short_name",       "higher_authority", "higher_authority_code", "legal_basis",     "purpose",
      "data_protocols",   "user_groups",      "carrier_name",       "carrier_address",    "registration_date",
      "commissioning_date", "technical_platform", "database_platform", "hosting_location", "data_volume",
      "update_frequency", "officer_surname",  "officer_company",    "officer_company_address", "manager_name",
      "description"};

  // one record blank in 16 descriptive columns plus service_rate
  const std::size_t blank = 16;
  std::vector<bool> blank_row(n, false);
  blank_row[blank] = true;

  auto personal_null = pick_rows(rng, n, 1, blank_row);
  auto financial_null = pick_rows(rng, n, 1, blank_row);
  auto rate_dash = pick_rows(rng, n, 45, blank_row);
  auto rate_nav = pick_rows(rng, n, 34, either(blank_row, rate_dash));

  auto web_null = pick_rows(rng, n, 58);
  auto taken = web_null;
  auto web_dash = pick_rows(rng, n, 22, taken);
  taken = either(taken, web_dash);
  auto web_bare = pick_rows(rng, n, 2, taken);
  taken = either(taken, web_bare);
  auto web_nav = pick_rows(rng, n, 1, taken);
  taken = either(taken, web_nav);
  auto web_nav_pct = pick_rows(rng, n, 3, taken);
  taken = either(taken, web_nav_pct);
  auto web_invalid = pick_rows(rng, n, 49, taken);

  auto phone_bad = pick_rows(rng, n, 2);
  auto email_bad = pick_rows(rng, n, 3);
  auto manager_null = pick_rows(rng, n, 2);
  auto manager_bad = pick_rows(rng, n, 2, manager_null);
  auto holder_null = pick_rows(rng, n, 2);
  auto holder_dash = pick_rows(rng, n, 2, holder_null);
  auto holder_bad = pick_rows(rng, n, 10, either(holder_null, holder_dash));
  auto holder_name_dash = pick_rows(rng, n, 5);
  auto closed = pick_rows(rng, n, 60);
  auto closing_dots = pick_within(rng, closed, 27);

  // columns with undeclared '-' / 'nav' values next to real ones
  const std::size_t loose[] = {16, 18, 20, 21, 23, 26, 28, 30};
  std::vector<std::vector<bool>> loose_rows;
  for (std::size_t k = 0; k < std::size(loose); ++k) loose_rows.push_back(pick_rows(rng, n, 3, blank_row));

  static const char* const kPlatforms[] = {"Oracle", "PostgreSQL", "MS SQL Server", "MySQL"};
  static const char* const kFrequency[] = {"katru dienu", "katru nedēļu", "katru mēnesi", "pēc vajadzības"};

  Dataset::Builder b("government_is.csv", header);
  std::vector<std::string> row(header.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::string id = std::to_string(i + 1);
    row[0] = std::to_string(1000 + i);
    row[1] = "Informācijas sistēma " + id;
    row[2] = personal_null[i] ? "" : (rng.below(2) ? "satur" : "nesatur");
    row[3] = financial_null[i] ? "" : (rng.below(2) ? "satur" : "nesatur");
    row[4] = blank_row[i] ? "" : rate_dash[i] ? "-" : rate_nav[i] ? "nav" : "e-pakalpojums " + id;
    if (web_null[i]) {
      row[5] = "";
    } else if (web_dash[i]) {
      row[5] = "http://-";
    } else if (web_bare[i]) {
      row[5] = "http://";
    } else if (web_nav[i]) {
      row[5] = "http://Nav";
    } else if (web_nav_pct[i]) {
      row[5] = "http://Nav%";
    } else if (web_invalid[i]) {
      static const char* const kBad[] = {"www.sistema", "https://www.sistema", "http://sistema"};
      const auto k = i % 3;
      row[5] = std::string(kBad[k]) + id + (k == 2 ? ".com" : ".lv");
    } else {
      row[5] = i % 2 ? "http://www.sistema" + id + ".lv" : "http://sistema" + id + ".gov.lv/par";
    }
    row[6] = std::to_string(5000 + i);
    row[7] = "Persona " + id;
    if (phone_bad[i]) {
      row[8] = "2" + digits(rng, 7);
    } else {
      row[8] = i % 3 == 0 ? "3716" + digits(rng, 7) : "6" + digits(rng, 7);
    }
    row[9] = email_bad[i] ? "persona" + id + "@example.com" : "persona" + id + "@iestade.gov.lv";
    row[10] = manager_null[i] ? "" : manager_bad[i] ? number(rng, 10) : number(rng, 11);
    row[11] = holder_null[i] ? "" : holder_dash[i] ? "-" : holder_bad[i] ? number(rng, 9) : number(rng, 11);
    row[12] = holder_name_dash[i] ? "-" : "Turētājs " + std::to_string(1 + i % 40);
    row[13] = closed[i] ? "slēgts" : "aktīvs";
    Ymd close = random_date(rng, 2010, 2017);
    row[14] = !closed[i] ? "" : closing_dots[i] ? mdy_dots(close) : mdy_slash(close);
    for (std::size_t c = 15; c <= 30; ++c) row[c] = header[c] + " " + id;
    row[16] = "Ministrija " + std::to_string(1 + i % 13);
    row[17] = number(rng, 11);
    row[24] = mdy_slash(random_date(rng, 1998, 2009));
    row[25] = mdy_slash(random_date(rng, 2000, 2012));
    row[26] = kPlatforms[i % std::size(kPlatforms)];
    row[27] = kPlatforms[(i / 4) % std::size(kPlatforms)];
    row[29] = std::to_string(1 + rng.below(500)) + "." + std::to_string(rng.below(10));
    row[30] = kFrequency[i % std::size(kFrequency)];
    for (std::size_t k = 0; k < std::size(loose); ++k) {
      if (loose_rows[k][i]) row[loose[k]] = k % 2 ? "nav" : "-";
    }
    if (blank_row[i]) {
      for (std::size_t c = 15; c <= 30; ++c) row[c] = "";
    }
    row[31] = "Uzvārds " + id;
    row[32] = "Iestāde " + std::to_string(1 + i % 30);
    row[33] = "Rīga, Smilšu iela " + std::to_string(1 + i % 50);
    row[34] = "Pārvaldnieks " + std::to_string(1 + i % 25);
    row[35] = "Sistēmas apraksts " + id;
    b.add_row(row);
  }
  return std::move(b).build();
}

Dataset licences_dataset(std::size_t n) {
  Rng rng(0x5EED0002);
  auto hours_null = pick_rows(rng, n, n * 89 / 100);
  static const char* const kPrograms[] = {"Angļu valoda", "Programmēšana", "Grāmatvedība", "Zīmēšana", "Šahs", "Dejas"};
  Dataset::Builder b("licences.csv", {"licence_number", "institution", "program_code", "program_name", "issued",
                                      "valid_until", "status", "stundas", "address"});
  std::vector<std::string> row(9);
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = rng.below(std::size(kPrograms));
    Ymd issued = random_date(rng, 2012, 2017);
    row[0] = std::to_string(100000 + i);
    row[1] = "Mācību centrs " + std::to_string(1 + rng.below(150));
    row[2] = "P" + pad(p + 1, 3);
    row[3] = kPrograms[p];
    row[4] = dmy_dots(issued);
    row[5] = dmy_dots({issued.y + 5, issued.m, issued.d});
    row[6] = rng.below(20) == 0 ? "anulēta" : "derīga";
    row[7] = hours_null[i] ? "" : std::to_string(8 + rng.below(160));
    row[8] = "Rīga, Skolas iela " + std::to_string(1 + rng.below(60));
    b.add_row(row);
  }
  return std::move(b).build();
}

namespace {

// Rare topic groups: four seen once, three twice, one three times.
const std::vector<std::pair<std::string, std::size_t>>& rare_topics() {
  static const std::vector<std::pair<std::string, std::size_t>> v{
      {"Dzīvnieki", 1}, {"Kapsētas", 1}, {"Medības", 1}, {"Zvejniecība", 1},
      {"Jaunatne", 2},  {"Reklāma", 2},  {"Tūrisms", 2}, {"Sports", 3}};
  return v;
}

const std::vector<std::string>& common_topics() {
  static const std::vector<std::string> v{
      "Būvniecība",  "Izglītība",       "Kultūra",     "Labklājība",   "Mājokļi",      "Nodokļi",
      "Satiksme",    "Sabiedriskā kārtība", "Veselība", "Vide",        "Komunālie pakalpojumi", "Zemes lietas",
      "Ielas",       "Apgaismojums",    "Parki",       "Atkritumi",    "Dokumenti",    "Cits"};
  return v;
}

std::vector<std::string> topic_column(Rng& rng, std::size_t n) {
  std::vector<std::string> col;
  col.reserve(n);
  for (const auto& [name, count] : rare_topics()) {
    for (std::size_t k = 0; k < count; ++k) col.push_back(name);
  }
  const auto& common = common_topics();
  for (std::size_t i = 0; col.size() < n; ++i) col.push_back(common[i < common.size() * 4 ? i % common.size() : rng.below(common.size())]);
  for (std::size_t i = n - 1; i > 0; --i) std::swap(col[i], col[rng.below(i + 1)]);
  return col;
}

}  // namespace

Dataset communication_dataset() {
  constexpr std::size_t n = kCommunicationRows;
  Rng rng(0x5EED0004);
  const std::vector<std::pair<std::string, std::size_t>> channels{
      {"e-pasts", 15000}, {"portāls", 9262}, {"tikšanās", 5000}, {"telefons", 4000},
      {"īsziņa", 2000},   {"cits", 1500},    {"fakss", 1228},    {"pasts", 1000}, {"sociālie tīkli", 500}};
  std::vector<std::string> channel;
  for (const auto& [name, count] : channels) channel.insert(channel.end(), count, name);
  for (std::size_t i = n - 1; i > 0; --i) std::swap(channel[i], channel[rng.below(i + 1)]);
  auto topics = topic_column(rng, n);

  static const char* const kDistricts[] = {"Centrs", "Kurzeme", "Latgale", "Vidzeme", "Zemgale", "Ziemeļi"};
  static const char* const kStatus[] = {"atbildēts", "pārsūtīts", "slēgts"};
  Dataset::Builder b("communication.csv",
                     {"id", "date", "channel", "topicgroup", "topic", "district", "applicant_type", "status"});
  std::vector<std::string> row(8);
  for (std::size_t i = 0; i < n; ++i) {
    row[0] = std::to_string(i + 1);
    row[1] = dmy_dots(random_date(rng, 2016, 2017));
    row[2] = channel[i];
    row[3] = topics[i];
    row[4] = "Jautājums " + std::to_string(rng.below(5000));
    row[5] = kDistricts[rng.below(std::size(kDistricts))];
    row[6] = rng.below(5) == 0 ? "juridiska persona" : "fiziska persona";
    row[7] = kStatus[rng.below(std::size(kStatus))];
    b.add_row(row);
  }
  return std::move(b).build();
}

Dataset topicgroup_dataset(std::size_t n) {
  Rng rng(0x5EED0006);
  auto topics = topic_column(rng, n);
  Dataset::Builder b("topicgroup.csv", {"id", "topicgroup"});
  for (std::size_t i = 0; i < n; ++i) b.add_row({std::to_string(i + 1), topics[i]});
  return std::move(b).build();
}

Dataset termination_dataset(std::size_t n, std::size_t unclosed) {
  Rng rng(0x5EED0003);
  auto bad = pick_rows(rng, n, unclosed);
  auto both = pick_rows(rng, n, n / 10, bad);
  auto closed_only = pick_rows(rng, n, n / 20, either(bad, both));
  Dataset::Builder b("termination.csv", {"id", "status", "terminated", "closed"});
  for (std::size_t i = 0; i < n; ++i) {
    const bool terminated = bad[i] || both[i];
    const bool closed = both[i] || closed_only[i];
    b.add_row({std::to_string(i + 1), closed ? "likvidēts" : "aktīvs",
               terminated ? dmy_dots(random_date(rng, 2015, 2018)) : "", closed ? (rng.below(2) ? "L" : "R") : ""});
  }
  return std::move(b).build();
}

Dataset nullability_dataset() {
  constexpr std::size_t n = 1000;
  const std::size_t nulls[] = {0, 4, 29, 30, 890};
  Rng rng(0x5EED0007);
  std::vector<std::vector<bool>> empty;
  std::vector<std::string> header;
  for (auto k : nulls) {
    empty.push_back(pick_rows(rng, n, k));
    header.push_back("n" + std::to_string(k));
  }
  Dataset::Builder b("nullability.csv", header);
  std::vector<std::string> row(std::size(nulls));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < std::size(nulls); ++c) row[c] = empty[c][i] ? "" : "v" + std::to_string(i % 7);
    b.add_row(row);
  }
  return std::move(b).build();
}

void save(const Dataset& ds, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << write_csv(ds);
}

std::filesystem::path spec_dir() { return ODQ_SPEC_DIR; }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace odq::fixtures
