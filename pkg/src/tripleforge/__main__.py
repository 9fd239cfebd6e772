from tripleforge.cli import run

run()
