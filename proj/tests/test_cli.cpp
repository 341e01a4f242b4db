// Exercises the installed command-line contract through real subprocesses:
// exit codes 0/1/2/3 and the stable machine-readable output lines.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string tmp = "cli_out.txt";
    std::string cmd = std::string(TOLLWALK_CLI_PATH) + " " + args + " > " + tmp + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(tmp);
    std::ostringstream os;
    os << in.rdbuf();
    r.out = os.str();
    std::remove(tmp.c_str());
    return r;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    std::string l;
    while (std::getline(in, l))
        if (l == line) return true;
    return false;
}

const char* kC4 =
    "4 4\n0 1\n0 3\n1 2\n2 3\n";

}  // namespace

TEST_CASE("interval with oracle cross-check") {
    write_file("c4.txt", kC4);
    RunResult r = run_cli("interval --graph c4.txt 0 2 --verify --machine");
    CHECK(r.exit_code == 0);
    CHECK(has_line(r.out, "v=1"));
    CHECK(has_line(r.out, "command=interval"));
    CHECK(has_line(r.out, "members=0,1,2,3"));
    CHECK(has_line(r.out, "verified=1"));

    RunResult bad = run_cli("interval --graph c4.txt 0 9");
    CHECK(bad.exit_code == 2);  // vertex out of range
    RunResult missing = run_cli("interval --graph nosuch.txt 0 1");
    CHECK(missing.exit_code == 2);
    std::remove("c4.txt");
}

TEST_CASE("axioms exit codes") {
    write_file("c4.txt", kC4);
    RunResult sat = run_cli("axioms --graph c4.txt --axiom J2 --machine");
    CHECK(sat.exit_code == 0);
    CHECK(has_line(sat.out, "axiom=J2 status=satisfied"));

    RunResult vio = run_cli("axioms --graph c4.txt --axiom JC --machine");
    CHECK(vio.exit_code == 1);
    CHECK(has_line(vio.out, "axiom=JC status=violated witness=0,1,2,3"));

    RunResult unknown = run_cli("axioms --graph c4.txt --axiom bogus");
    CHECK(unknown.exit_code == 2);
    RunResult both = run_cli("axioms");
    CHECK(both.exit_code == 2);  // neither --graph nor --transit

    write_file("r.txt", "2\n0 1 : 0 1\n");
    RunResult transit = run_cli("axioms --transit r.txt --axiom b1 --machine");
    CHECK(transit.exit_code == 0);
    std::remove("c4.txt");
    std::remove("r.txt");
}

TEST_CASE("classify") {
    write_file("c4.txt", kC4);
    RunResult r = run_cli("classify --graph c4.txt --machine");
    CHECK(r.exit_code == 0);
    CHECK(has_line(r.out, "class=triangle-free member=1"));
    CHECK(has_line(r.out, "class=distance-hereditary member=1"));
    CHECK(has_line(r.out,
                   "class=chordal member=0 certificate_kind=induced-cycle "
                   "certificate=0,1,2,3"));
    std::remove("c4.txt");
}

TEST_CASE("theorem sweep and converse probe") {
    RunResult sweep = run_cli("theorem --id thm-jc-chordal --max-n 4 --machine");
    CHECK(sweep.exit_code == 0);
    CHECK(has_line(sweep.out, "mode=sweep"));
    CHECK(has_line(sweep.out, "graphs=10"));
    CHECK(has_line(sweep.out, "disagreements=0"));

    RunResult conv = run_cli(
        "theorem --id char-tree --trials 200 --max-trial-n 4 --seed 7 --machine");
    CHECK(conv.exit_code == 0);
    CHECK(has_line(conv.out, "mode=converse"));
    CHECK(has_line(conv.out, "trials=200"));
    CHECK(has_line(conv.out, "falsifications=0"));

    CHECK(run_cli("theorem --id nope").exit_code == 2);
}

TEST_CASE("nondef scant") {
    RunResult r = run_cli("nondef scant --d 2 --machine");
    CHECK(r.exit_code == 0);
    CHECK(has_line(r.out, "left_scant=1"));
    CHECK(has_line(r.out, "right_scant=0"));
    CHECK(has_line(r.out, "witness_pair=v'2,x'"));
    CHECK(has_line(r.out, "witness_fset=8,9,16"));
    CHECK(has_line(r.out, "first_offender=0,2"));
    CHECK(run_cli("nondef scant --d 1").exit_code == 2);
}

TEST_CASE("nondef ef-exact") {
    RunResult dup = run_cli("nondef ef-exact --left cycle:8 --right cycle:9 "
                            "--moves 1 --machine");
    CHECK(dup.exit_code == 0);
    CHECK(has_line(dup.out, "winner=duplicator"));

    RunResult spo = run_cli("nondef ef-exact --left path:3 --right complete:2 "
                            "--moves 3 --machine");
    CHECK(spo.exit_code == 1);
    CHECK(has_line(spo.out, "winner=spoiler"));

    CHECK(run_cli("nondef ef-exact --moves 1").exit_code == 2);  // no inputs
    // d = 9 at two moves exceeds the default state budget.
    CHECK(run_cli("nondef ef-exact --d 9 --moves 2").exit_code == 3);
}

TEST_CASE("nondef ef-strategy") {
    RunResult r = run_cli("nondef ef-strategy --d 9 --moves 2 --seed 11 "
                          "--runs 20 --machine");
    CHECK(r.exit_code == 0);
    CHECK(has_line(r.out, "runs=20"));
    CHECK(has_line(r.out, "wins=20"));
    CHECK(run_cli("nondef ef-strategy --d 4 --moves 2 --runs 1").exit_code == 2);
}

TEST_CASE("catalog emit") {
    RunResult g6 = run_cli("catalog C4 --emit graph6");
    CHECK(g6.exit_code == 0);
    CHECK(has_line(g6.out, "Cl"));

    RunResult list = run_cli("catalog");
    CHECK(list.exit_code == 0);
    CHECK(has_line(list.out, "house"));

    RunResult gadget = run_cli("catalog G_d:2 --machine");
    CHECK(gadget.exit_code == 0);
    CHECK(has_line(gadget.out, "n=17"));
    CHECK(has_line(gadget.out, "m=26"));

    CHECK(run_cli("catalog nosuch").exit_code == 2);
}
