import java.sql.*;

class StatementUpdate {
    void run(Connection c) throws SQLException {
        Statement st = c.createStatement();
        st.executeUpdate("DELETE FROM orders WHERE qty = 0");
    }
}
