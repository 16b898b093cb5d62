// Placeholder CLI entry point; subcommands are wired up with the runner.
int main()
{
    return 0;
}
