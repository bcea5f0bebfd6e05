from cli.commands import app

# 실행 예: python main.py goodstein 3 --variant nested
if __name__ == "__main__":
    app()
