from cli.commands import qaoa_maxcut

if __name__ == "__main__":
    qaoa_maxcut()
