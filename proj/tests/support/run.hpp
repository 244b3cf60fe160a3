#ifndef LOGCENTRE_TESTS_RUN_HPP
#define LOGCENTRE_TESTS_RUN_HPP

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace run {

struct Result {
    int status = -1;
    std::string out;
};

/* Runs a shell command, capturing stdout; stderr is discarded. */
inline Result shell(std::string const& cmd)
{
    Result r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, n);
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

}  // namespace run

#endif
